import pytest

from monopath.budget import (
    DEFAULT_BUDGET,
    ENV_BUDGET,
    BudgetExceeded,
    WorkMeter,
    default_budget,
    meter,
)


def test_charge_under_limit():
    wm = WorkMeter(10)
    for _ in range(10):
        wm.charge()
    assert wm.used == 10


def test_charge_over_limit_raises():
    wm = WorkMeter(5, label="tiny job")
    wm.charge(5)
    with pytest.raises(BudgetExceeded, match="tiny job"):
        wm.charge()


def test_charge_amount():
    wm = WorkMeter(100)
    wm.charge(99)
    wm.charge(1)
    with pytest.raises(BudgetExceeded):
        wm.charge(1)


def test_default_budget_env(monkeypatch):
    monkeypatch.delenv(ENV_BUDGET, raising=False)
    assert default_budget() == DEFAULT_BUDGET
    monkeypatch.setenv(ENV_BUDGET, "1234")
    assert default_budget() == 1234


@pytest.mark.parametrize("raw", ["zero", "-3", "0"])
def test_default_budget_env_invalid(monkeypatch, raw):
    monkeypatch.setenv(ENV_BUDGET, raw)
    with pytest.raises(ValueError):
        default_budget()


def test_meter_passthrough():
    wm = WorkMeter(7, label="outer")
    assert meter(wm, "inner") is wm
    fresh = meter(3, "inner")
    assert fresh.limit == 3
    assert fresh.label == "inner"
