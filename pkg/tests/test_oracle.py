import random
from itertools import combinations

import pytest

from conscheck.core import Instance, Problem, PSet, Sample, VSet, is_consistent
from conscheck.oracle import (
    BudgetExceededError,
    OracleBudget,
    all_consistent,
    candidate_count,
    enumerate_candidates,
    oracle_solve,
)
from conscheck.reductions import CnfFormula, brute_force_independent_set, reduce_sat_to_2col
from instance_gen import random_graph, random_instance


def _inst(problem, n, samples, k=None, d=None):
    return Instance(problem, n, tuple(Sample(e, l) for e, l in samples), k=k, d=d)


def test_candidates_two_coloring_power_set():
    inst = _inst(Problem.TWO_COLORING, 2, [((), 1)])
    assert list(enumerate_candidates(inst)) == [VSet(()), VSet((0,)), VSet((1,)), VSet((0, 1))]


def test_candidates_matching_all_pairs():
    inst = _inst(Problem.MATCHING, 3, [((), 1)], k=1)
    assert list(enumerate_candidates(inst)) == [PSet(((0, 1),)), PSet(((0, 2),)), PSet(((1, 2),))]


def test_candidates_independent_set_count():
    inst = _inst(Problem.INDEPENDENT_SET_DEG, 4, [((), 1)], k=2, d=1)
    assert len(list(enumerate_candidates(inst))) == 6 == candidate_count(inst)


def test_ecc_candidates_are_distinct_nontrivial_families():
    inst = _inst(Problem.EDGE_CLIQUE_COVER, 3, [((), 1)], k=2)
    cands = list(enumerate_candidates(inst))
    # 4 vertex sets of size >= 2, choose 2
    assert len(cands) == 6
    assert all(len(set(c.members)) == 2 for c in cands)


def test_oracle_sat_gadget_found():
    inst = reduce_sat_to_2col(CnfFormula(4, ((1, -2, -3, 4), (-1, 2, -4))))
    sol = oracle_solve(inst)
    assert sol is not None and is_consistent(inst, sol)


def test_oracle_matching_example():
    inst = _inst(Problem.MATCHING, 4, [(((0, 1), (2, 3)), 1), (((0, 1),), 0)], k=1)
    assert oracle_solve(inst) == PSet(((2, 3),))


@pytest.mark.parametrize("problem", list(Problem))
def test_oracle_contradiction(problem):
    E = ((0, 1),)
    inst = _inst(problem, 3, [(E, 1), (E, 0)], k=1 if problem.has_k else None, d=2 if problem.has_d else None)
    assert oracle_solve(inst) is None


def test_budget_exceeded_is_raised_before_enumeration():
    inst = _inst(Problem.TWO_COLORING, 12, [((), 1)])
    with pytest.raises(BudgetExceededError):
        enumerate_candidates(inst, OracleBudget(100))


@pytest.mark.parametrize("problem", list(Problem))
def test_oracle_found_is_consistent_and_deterministic(problem):
    rng = random.Random(5)
    for _ in range(60):
        inst = random_instance(rng, problem)
        a, b = oracle_solve(inst), oracle_solve(inst)
        assert a == b
        if a is not None:
            assert is_consistent(inst, a)
            assert a in all_consistent(inst)
        else:
            assert all_consistent(inst) == []


def test_oracle_positive_only_is_matches_independent_set_search():
    rng = random.Random(11)
    for _ in range(150):
        n, k = rng.randint(1, 7), rng.randint(0, 3)
        graphs = [random_graph(rng, n, rng.random(), 2) for _ in range(rng.randint(1, 3))]
        inst = Instance(Problem.INDEPENDENT_SET_DEG, n, tuple(Sample(g, 1) for g in graphs), k=k, d=2)
        union = {e for g in graphs for e in g}
        assert (oracle_solve(inst) is not None) == brute_force_independent_set(union, n, k)


def test_is_candidates_in_lexicographic_order():
    inst = _inst(Problem.INDEPENDENT_SET_DEG, 4, [((), 1)], k=2, d=1)
    assert [c.vertices for c in enumerate_candidates(inst)] == list(combinations(range(4), 2))


def test_within_positives_returns_the_same_verdict():
    rng = random.Random(23)
    for problem in (Problem.MATCHING, Problem.PATH, Problem.EDGE_CLIQUE_COVER, Problem.TWO_COLORING):
        for _ in range(150):
            inst = random_instance(rng, problem)
            assert oracle_solve(inst, within_positives=True) == oracle_solve(inst)
