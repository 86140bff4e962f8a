"""Consistency checking for graph problems.

Given graphs labelled positive or negative, find one solution (a vertex set,
pair set or clique family) whose problem predicate holds on exactly the
positive graphs.
"""

from .core import (
    ConsCheckError,
    Cover,
    Instance,
    InvalidArgumentError,
    InvalidInstanceError,
    Problem,
    PSet,
    Sample,
    Solution,
    Verdict,
    VSet,
    is_consistent,
    verify,
)
from .oracle import BudgetExceededError, OracleBudget, oracle_solve
from .solvers import solve

__all__ = [
    "BudgetExceededError",
    "ConsCheckError",
    "Cover",
    "Instance",
    "InvalidArgumentError",
    "InvalidInstanceError",
    "OracleBudget",
    "PSet",
    "Problem",
    "Sample",
    "Solution",
    "VSet",
    "Verdict",
    "is_consistent",
    "oracle_solve",
    "solve",
    "verify",
]
