"""One entry point that routes an instance to its exact solver."""

from __future__ import annotations

from typing import Optional

from .core import Instance, Problem, Verdict
from .edge import solve_ecc, solve_matching_cc, solve_path_cc
from .partition import solve_split, solve_two_coloring_fpt
from .vertex import solve_ds_degree, solve_is_degree_fpt

SOLVER_NAMES = {
    Problem.TWO_COLORING: "two_coloring_fpt",
    Problem.SPLIT_GRAPH: "split",
    Problem.MATCHING: "matching_cc",
    Problem.PATH: "path_cc",
    Problem.EDGE_CLIQUE_COVER: "ecc",
    Problem.INDEPENDENT_SET_DEG: "is_degree_fpt",
    Problem.DOMINATING_SET_DEG: "ds_degree",
}


def solve(instance: Instance, mode: str = "random", seed: int = 0, trials: Optional[int] = None) -> Verdict:
    """Solve with the problem's dedicated algorithm.

    ``mode``, ``seed`` and ``trials`` only matter for the color-coding solvers
    (matching, path, independent set); the others are deterministic.
    """
    p = instance.problem
    if p is Problem.TWO_COLORING:
        return solve_two_coloring_fpt(instance)
    if p is Problem.SPLIT_GRAPH:
        return solve_split(instance)
    if p is Problem.MATCHING:
        return solve_matching_cc(instance, mode, seed, trials)
    if p is Problem.PATH:
        return solve_path_cc(instance, mode, seed, trials)
    if p is Problem.EDGE_CLIQUE_COVER:
        return solve_ecc(instance)
    if p is Problem.INDEPENDENT_SET_DEG:
        return solve_is_degree_fpt(instance, mode, seed, trials)
    return solve_ds_degree(instance)
