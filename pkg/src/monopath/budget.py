"""Work budgets shared by the counting, universe, and search code.

Every exact computation in this package is all-or-nothing: when it would
exceed its work budget it raises :class:`BudgetExceeded` instead of
returning a truncated or approximate number.  Work units are deliberately
coarse (memo entries, enumerated structures, search nodes, edge slots);
the budget is a guard rail, not a profiler.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

DEFAULT_BUDGET = 50_000_000
ENV_BUDGET = "MONOPATH_BUDGET"


class BudgetExceeded(RuntimeError):
    """An exact computation needed more work units than allowed."""


def default_budget() -> int:
    raw = os.environ.get(ENV_BUDGET)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{ENV_BUDGET} must be an integer, got {raw!r}") from exc
    if value <= 0:
        raise ValueError(f"{ENV_BUDGET} must be positive, got {raw!r}")
    return value


@dataclass
class WorkMeter:
    """Counts abstract work units against a hard limit."""

    limit: int
    label: str = "work"
    used: int = 0

    def charge(self, amount: int = 1) -> None:
        self.used += amount
        if self.used > self.limit:
            raise BudgetExceeded(
                f"{self.label}: exceeded work budget of {self.limit} units"
            )


def meter(budget: int | WorkMeter | None, label: str) -> WorkMeter:
    """A fresh meter; ``budget=None`` picks up the environment default.

    Passing an existing :class:`WorkMeter` returns it unchanged, so a caller
    can pool the work of several exact computations under one limit.
    """
    if isinstance(budget, WorkMeter):
        return budget
    return WorkMeter(default_budget() if budget is None else budget, label)
