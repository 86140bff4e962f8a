"""Exhaustive reference solvers.

Every candidate of the problem's hypothesis space is enumerated in a fixed
order and checked with :func:`conscheck.core.is_consistent`.  No pruning: this
module is the ground truth the exact solvers are tested against.

Order of candidates: vertex sets by size, then lexicographically; pair sets as
lexicographic combinations of the lexicographically sorted pairs; covers as
lexicographic combinations of vertex sets (size >= 2) in vertex-set order.

With ``within_positives=True`` pair-set candidates are drawn only from the
pairs present in every positive sample, and cover members only from vertex
sets that are cliques of every positive sample.  Any candidate outside those
pools fails some positive sample, so verdicts are unchanged; this just makes
larger instances enumerable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator

from .core import ConsCheckError, Cover, Instance, Problem, PSet, Solution, Verdict, VSet, all_pairs, is_consistent

DEFAULT_MAX_CANDIDATES = 10**7


class BudgetExceededError(ConsCheckError):
    pass


@dataclass(frozen=True)
class OracleBudget:
    max_candidates: int = DEFAULT_MAX_CANDIDATES

    def __post_init__(self):
        if self.max_candidates < 1:
            raise ValueError("max_candidates must be at least 1")


def vertex_subsets(n: int, sizes=None) -> Iterator[tuple[int, ...]]:
    for size in sizes if sizes is not None else range(n + 1):
        yield from combinations(range(n), size)


def clique_candidates(n: int) -> list[tuple[int, ...]]:
    """All vertex sets of size >= 2, in candidate order."""
    return list(vertex_subsets(n, range(2, n + 1)))


def _pair_pool(instance: Instance, within_positives: bool) -> list:
    pairs = all_pairs(instance.n)
    if within_positives and instance.positives:
        common = set(pairs)
        for s in instance.positives:
            common &= s.edge_set
        pairs = sorted(common)
    return pairs


def _clique_pool(instance: Instance, within_positives: bool) -> list:
    pool = clique_candidates(instance.n)
    if within_positives and instance.positives:
        graphs = [s.edge_set for s in instance.positives]
        pool = [c for c in pool if all(all(e in g for e in combinations(c, 2)) for g in graphs)]
    return pool


def candidate_count(instance: Instance, within_positives: bool = False) -> int:
    n, k, p = instance.n, instance.k, instance.problem
    if p in (Problem.TWO_COLORING, Problem.SPLIT_GRAPH):
        return 2**n
    if p in (Problem.INDEPENDENT_SET_DEG, Problem.DOMINATING_SET_DEG):
        return comb(n, k)
    if p in (Problem.MATCHING, Problem.PATH):
        return comb(len(_pair_pool(instance, within_positives)), k)
    if not within_positives:
        return comb(2**n - n - 1, k)
    return comb(len(_clique_pool(instance, within_positives)), k)


def enumerate_candidates(
    instance: Instance, budget: OracleBudget = OracleBudget(), within_positives: bool = False
) -> Iterator[Solution]:
    count = candidate_count(instance, within_positives)
    if count > budget.max_candidates:
        raise BudgetExceededError(f"{count} candidates exceed budget of {budget.max_candidates}")
    return _candidates(instance, within_positives)


def _candidates(instance: Instance, within_positives: bool) -> Iterator[Solution]:
    n, k, p = instance.n, instance.k, instance.problem
    if p in (Problem.TWO_COLORING, Problem.SPLIT_GRAPH):
        for X in vertex_subsets(n):
            yield VSet(X)
    elif p in (Problem.INDEPENDENT_SET_DEG, Problem.DOMINATING_SET_DEG):
        for X in combinations(range(n), k):
            yield VSet(X)
    elif p in (Problem.MATCHING, Problem.PATH):
        for F in combinations(_pair_pool(instance, within_positives), k):
            yield PSet(F)
    else:
        for family in combinations(_clique_pool(instance, within_positives), k):
            yield Cover(family)


def oracle_solve(instance: Instance, budget: OracleBudget = OracleBudget(), within_positives: bool = False) -> Verdict:
    """First consistent candidate in enumeration order, or None."""
    for cand in enumerate_candidates(instance, budget, within_positives):
        if is_consistent(instance, cand):
            return cand
    return None


def all_consistent(instance: Instance, budget: OracleBudget = OracleBudget()) -> list[Solution]:
    return [c for c in enumerate_candidates(instance, budget) if is_consistent(instance, c)]
