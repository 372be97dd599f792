"""
src.utils.budget_util

================================================================================
Exploration Budget Guard
================================================================================

Overview
--------
Exhaustive enumerations (word balls, tame-complex portions) must stop at an
explicit, visible bound. `Budget` counts what an enumeration has produced
and raises `BudgetExceeded` the moment a configured limit is passed,
recording which bound tripped.

Usage Context
-------------
Example:
    budget = Budget("VERTEX_CAP", config["VERTEX_CAP"])
    budget.check(len(vertices))
"""

from src.exceptions.custom_exceptions import BudgetExceeded
from src.utils.logger_util import log_warning


class Budget:
    """
    A named upper bound on a count.

    :param bound: Name of the configured bound (e.g. ``"VERTEX_CAP"``).
    :type bound: str
    :param limit: Largest allowed count.
    :type limit: int
    """

    def __init__(self, bound: str, limit: int):
        self.bound = bound
        self.limit = limit
        self.used = 0

    def check(self, reached: int) -> None:
        """
        Record the current count and enforce the limit.

        :param reached: Count reached so far.
        :type reached: int
        :raises BudgetExceeded: If ``reached`` is above the limit.
        """
        self.used = reached
        if reached > self.limit:
            details = {"bound": self.bound, "limit": self.limit, "reached": reached}
            log_warning("Exploration budget exceeded", function_name="Budget.check", context=details)
            raise BudgetExceeded(f"{self.bound} of {self.limit} exceeded", details=details)
