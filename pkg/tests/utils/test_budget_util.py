"""
tests.utils.test_budget_util

================================================================================
Unit Tests for the Exploration Budget Guard
================================================================================
"""

import pytest

from src.exceptions.custom_exceptions import BudgetExceeded
from src.utils.budget_util import Budget


def test_check_within_limit_records_usage():
    budget = Budget("VERTEX_CAP", 10)
    budget.check(7)
    assert budget.used == 7


def test_check_over_limit_raises_with_bound():
    budget = Budget("VERTEX_CAP", 10)
    with pytest.raises(BudgetExceeded) as e:
        budget.check(11)
    assert e.value.details == {"bound": "VERTEX_CAP", "limit": 10, "reached": 11}
    assert "VERTEX_CAP" in str(e.value)


def test_check_at_limit_passes_then_overrun_keeps_count():
    budget = Budget("WORD_LENGTH", 2)
    budget.check(2)
    with pytest.raises(BudgetExceeded):
        budget.check(3)
    assert budget.used == 3


def test_warning_logged_on_overrun(mocker):
    warn = mocker.patch("src.utils.budget_util.log_warning")
    with pytest.raises(BudgetExceeded):
        Budget("VERTEX_CAP", 0).check(1)
    warn.assert_called_once()
