"""Exact Ramsey-number search for monotone paths at tiny parameters.

``exact_ramsey(k, q, n)`` finds the least N such that every q-coloring of
the complete k-uniform hypergraph on N ordered vertices contains a
monochromatic monotone path of length n, by refuting the existence of a
path-free coloring via backtracking.  Satisfiable levels yield an extremal
coloring, re-verified by the path DP; the first refuted level is the value.

Two engines, both assigning edges in colex order with the first edge pinned
to color 1 (colors are interchangeable):

* n = 2: a path of length 2 occupies k+1 vertices and consists of that
  tuple's two extreme k-windows, so path-freeness is exactly a disequality
  constraint per (k+1)-subset.  DFS with unit propagation over color
  domains.

* general n: DFS that carries the longest-path DP incrementally; assigning
  an edge relaxes one window value, which is undone on backtrack, and any
  relaxation reaching n prunes the branch.

This is deliberately an oracle for the closed formulas, not a competitive
solver; hopeless parameter ranges are out of scope.
"""

from __future__ import annotations

import sys
import time
from array import array
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .budget import default_budget
from .colorings import EdgeColoring
from .paths import longest_mono
from .subsets import colex_rank, subsets_colex


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int
    max_seconds: float | None = None

    def __post_init__(self) -> None:
        if self.max_nodes <= 0:
            raise ValueError("max_nodes must be positive")
        if self.max_seconds is not None and self.max_seconds <= 0:
            raise ValueError("max_seconds must be positive")


@dataclass(frozen=True)
class RamseyResult:
    """Outcome of exact_ramsey.

    status "exact": ``value`` is the least forcing N and ``extremal`` is a
    verified path-free coloring on value-1 vertices.  status
    "lower_bound_only": every level up to the ceiling was satisfiable, so
    the true value is >= ``lower_bound``.  status "budget_exhausted": the
    search stopped early; ``lower_bound`` reflects the levels finished.
    """

    status: str
    value: int | None
    lower_bound: int
    extremal: EdgeColoring | None
    nodes: int
    seconds: float

    def __post_init__(self) -> None:
        if self.status not in ("exact", "lower_bound_only", "budget_exhausted"):
            raise ValueError(f"unknown search status {self.status!r}")
        if (self.value is None) != (self.status != "exact"):
            raise ValueError("value must be set exactly for status 'exact'")


class _SearchStop(Exception):
    pass


class _Meter:
    """Shared node counter with periodic wall-clock checks."""

    def __init__(self, budget: SearchBudget):
        self.nodes = 0
        self.max_nodes = budget.max_nodes
        self.deadline = (
            None if budget.max_seconds is None else time.monotonic() + budget.max_seconds
        )

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise _SearchStop
        if self.deadline is not None and self.nodes % 2048 == 0:
            if time.monotonic() > self.deadline:
                raise _SearchStop


def _engine_disequality(big: int, k: int, q: int, mt: _Meter) -> array | None:
    """SAT search for n = 2: one != constraint per (k+1)-subset of vertices."""
    num_edges = comb(big, k)
    colors = [0] * num_edges
    if num_edges == 0:
        return array("B")
    adj: list[list[int]] = [[] for _ in range(num_edges)]
    for tup in combinations(range(big), k + 1):
        i = colex_rank(tup[:k])
        j = colex_rank(tup[1:])
        adj[i].append(j)
        adj[j].append(i)
    full = (1 << q) - 1
    domains = [full] * num_edges
    trail: list[tuple] = []

    def propagate(var: int, color: int) -> bool:
        stack = [(var, color)]
        while stack:
            v, c = stack.pop()
            if colors[v]:
                if colors[v] != c:
                    return False
                continue
            bit = 1 << (c - 1)
            if not domains[v] & bit:
                return False
            colors[v] = c
            trail.append((0, v, 0))
            trail.append((1, v, domains[v]))
            domains[v] = bit
            for nb in adj[v]:
                if colors[nb]:
                    if colors[nb] == c:
                        return False
                    continue
                d = domains[nb]
                if d & bit:
                    trail.append((1, nb, d))
                    d &= ~bit
                    domains[nb] = d
                    if not d:
                        return False
                    if not d & (d - 1):
                        stack.append((nb, d.bit_length()))
        return True

    def undo(mark: int) -> None:
        while len(trail) > mark:
            kind, v, old = trail.pop()
            if kind:
                domains[v] = old
            else:
                colors[v] = 0

    def dfs(pos: int) -> bool:
        while pos < num_edges and colors[pos]:
            pos += 1
        if pos == num_edges:
            return True
        choices = (1,) if pos == 0 else range(1, q + 1)
        for c in choices:
            if not domains[pos] & (1 << (c - 1)):
                continue
            mt.tick()
            mark = len(trail)
            if propagate(pos, c) and dfs(pos + 1):
                return True
            undo(mark)
        return False

    return array("B", colors) if dfs(0) else None


def _engine_dp(big: int, k: int, q: int, n: int, mt: _Meter) -> array | None:
    """SAT search for general n via DFS with an incremental path DP."""
    edges = list(subsets_colex(big, k))
    num_edges = len(edges)
    if num_edges == 0:
        return array("B")
    fronts = [e[:-1] for e in edges]
    backs = [e[1:] for e in edges]
    colors = [0] * num_edges
    tables: list[dict] = [{} for _ in range(q + 1)]

    def dfs(pos: int) -> bool:
        if pos == num_edges:
            return True
        front, back = fronts[pos], backs[pos]
        choices = (1,) if pos == 0 else range(1, q + 1)
        for c in choices:
            mt.tick()
            tab = tables[c]
            cand = tab.get(front, 0) + 1
            if cand >= n:
                continue
            colors[pos] = c
            old = tab.get(back, 0)
            bumped = cand > old
            if bumped:
                tab[back] = cand
            if dfs(pos + 1):
                return True
            if bumped:
                tab[back] = old
            colors[pos] = 0
        return False

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 4 * num_edges + 100))
    try:
        found = dfs(0)
    finally:
        sys.setrecursionlimit(old_limit)
    return array("B", colors) if found else None


def _level_sat(big: int, k: int, q: int, n: int, mt: _Meter) -> EdgeColoring | None:
    raw = (
        _engine_disequality(big, k, q, mt)
        if n == 2
        else _engine_dp(big, k, q, n, mt)
    )
    if raw is None:
        return None
    found = EdgeColoring(
        k=k,
        q=q,
        N=big,
        colors=raw,
        meta={"family": "search-extremal", "params": {"k": k, "q": q, "n": n}},
    )
    scan = longest_mono(found, want_witnesses=False)
    if scan.overall_max >= n:
        raise AssertionError("search produced a coloring the DP rejects")
    return found


def exact_ramsey(
    k: int,
    q: int,
    n: int,
    n_max: int | None = None,
    budget: SearchBudget | None = None,
) -> RamseyResult:
    """Least N forcing a monochromatic monotone path of length n, by search.

    Levels N are processed upward from the largest trivially satisfiable
    one; the first refuted level is exact.  ``n_max`` caps the levels
    attempted (None: keep going until refutation or budget).
    """
    if k < 2 or q < 1 or n < 1:
        raise ValueError("need k >= 2, q >= 1, n >= 1")
    if budget is None:
        budget = SearchBudget(max_nodes=default_budget())
    mt = _Meter(budget)
    t0 = time.monotonic()
    best: EdgeColoring | None = None
    start = n + k - 2
    level = start
    try:
        while n_max is None or level <= n_max:
            found = _level_sat(level, k, q, n, mt)
            if found is None:
                return RamseyResult(
                    status="exact",
                    value=level,
                    lower_bound=level,
                    extremal=best,
                    nodes=mt.nodes,
                    seconds=time.monotonic() - t0,
                )
            best = found
            level += 1
        return RamseyResult(
            status="lower_bound_only",
            value=None,
            lower_bound=level,
            extremal=best,
            nodes=mt.nodes,
            seconds=time.monotonic() - t0,
        )
    except _SearchStop:
        return RamseyResult(
            status="budget_exhausted",
            value=None,
            lower_bound=level if best is not None else start,
            extremal=best,
            nodes=mt.nodes,
            seconds=time.monotonic() - t0,
        )
