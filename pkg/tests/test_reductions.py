import random
from itertools import combinations

import pytest

from conscheck.core import Instance, InvalidArgumentError, Problem, Sample, VSet, is_consistent, max_degree
from conscheck.oracle import oracle_solve
from conscheck.reductions import (
    CnfFormula,
    SetCoverInstance,
    brute_force_independent_set,
    brute_force_sat,
    brute_force_set_cover,
    format_dimacs,
    parse_dimacs,
    path_layout,
    reduce_is_to_conscheck_is,
    reduce_sat_to_2col,
    reduce_setcover_to_is,
    reduce_setcover_to_matching,
    reduce_setcover_to_path,
)
from instance_gen import random_graph


def sc(universe, family, k):
    return SetCoverInstance(universe, tuple(frozenset(s) for s in family), k)


def solvable(inst):
    return oracle_solve(inst, within_positives=True) is not None


# --- SAT ---


def test_sat_gadget_samples():
    inst = reduce_sat_to_2col(CnfFormula(4, ((1, -2, -3, 4), (-1, 2, -4))))
    assert inst.n == 6
    assert [(s.edges, s.label) for s in inst.samples] == [
        (((0, 1),), 1),
        (((0, 2), (0, 5), (1, 3), (1, 4)), 0),
        (((0, 3), (1, 2), (1, 5)), 0),
    ]


def test_sat_single_literal():
    inst = reduce_sat_to_2col(CnfFormula(1, ((1,),)))
    assert inst.negatives[0].edges == ((0, 2),)
    assert is_consistent(inst, VSet((0, 2)))


def test_sat_contradiction():
    assert oracle_solve(reduce_sat_to_2col(CnfFormula(1, ((1,), (-1,))))) is None


def test_dimacs_round_trip():
    text = "c comment\np cnf 3 2\n1 -2 0\n2 3\n-1 0\n"
    phi = parse_dimacs(text)
    assert phi == CnfFormula(3, ((1, -2), (2, 3, -1)))
    assert parse_dimacs(format_dimacs(phi)) == phi


def test_dimacs_errors():
    with pytest.raises(InvalidArgumentError):
        parse_dimacs("1 2 0\n")
    with pytest.raises(InvalidArgumentError):
        parse_dimacs("p cnf 2 1\n1 3 0\n")


def test_sat_round_trip_random():
    rng = random.Random(2)
    for _ in range(120):
        nv = rng.randint(1, 4)
        clauses = tuple(
            tuple(rng.choice((1, -1)) * v for v in rng.sample(range(1, nv + 1), rng.randint(1, nv)))
            for _ in range(rng.randint(1, 4))
        )
        phi = CnfFormula(nv, clauses)
        assert brute_force_sat(phi) == solvable(reduce_sat_to_2col(phi))


# --- set cover to matching ---


@pytest.mark.parametrize(
    "inst,expected",
    [(sc(1, [{1}], 1), True), (sc(2, [{1}], 1), False), (sc(2, [{1}, {2}], 2), True)],
)
def test_setcover_to_matching_examples(inst, expected):
    assert brute_force_set_cover(inst) == expected
    assert solvable(reduce_setcover_to_matching(inst)) == expected


def test_setcover_to_matching_layout():
    inst = reduce_setcover_to_matching(sc(2, [{1}, {2}], 2))
    # star i: center 3i, leaves 3i+1, 3i+2
    assert inst.positives[0].edges == ((0, 1), (0, 2), (3, 4), (3, 5))
    assert inst.n == 6 and inst.t_minus == 2


# --- set cover to path ---


@pytest.mark.parametrize(
    "inst,expected",
    [(sc(1, [{1}], 1), True), (sc(2, [{1, 2}], 1), True), (sc(2, [{1}], 1), False)],
)
def test_setcover_to_path_examples(inst, expected):
    red = reduce_setcover_to_path(inst)
    assert red.k == 2 * inst.k
    assert solvable(red) == expected


def test_path_layout():
    assert path_layout(2, 2) == [[0], [1, 2], [3], [4, 5], [6]]


def test_literal_path_layering_admits_a_detour():
    # without the endpoint anchors, 1 - 0 - 2 is a 2-edge path through both
    # set vertices and the instance turns solvable although the cover is not
    inst = sc(2, [{1}, {2}], 1)
    assert not brute_force_set_cover(inst)
    assert solvable(reduce_setcover_to_path(inst, anchor_endpoints=False))
    assert not solvable(reduce_setcover_to_path(inst))


# --- set cover to independent set ---


def test_setcover_to_is_examples():
    one = reduce_setcover_to_is(sc(1, [{1}], 1))
    assert one.n == 2 and one.k == 2 and [s.edges for s in one.samples] == [((0, 1),)]
    assert oracle_solve(one) == VSet((0, 1))
    assert oracle_solve(reduce_setcover_to_is(sc(2, [{1}], 1))) is None
    assert oracle_solve(reduce_setcover_to_is(sc(2, [{1}, {2}], 2))) == VSet((0, 1, 2, 3))


def test_setcover_to_is_budget_capped_at_family_size():
    inst = reduce_setcover_to_is(sc(2, [{1, 2}], 3))
    assert inst.k == 2 and solvable(inst)


# --- independent set ---


def test_is_to_is_examples():
    tri = ((0, 1), (0, 2), (1, 2))
    red = reduce_is_to_conscheck_is(tri, 3, 2)
    assert red.t == 3 and oracle_solve(red) is None
    assert oracle_solve(reduce_is_to_conscheck_is(((0, 1), (1, 2)), 3, 2)) == VSet((0, 2))
    empty = reduce_is_to_conscheck_is((), 4, 4)
    assert [(s.edges, s.label) for s in empty.samples] == [((), 1)]
    assert oracle_solve(empty) == VSet((0, 1, 2, 3))


def test_degree_one_outputs():
    rng = random.Random(6)
    for _ in range(50):
        m = rng.randint(1, 5)
        fam = [set(rng.sample(range(1, 6), rng.randint(1, 5))) for _ in range(m)]
        red = reduce_setcover_to_is(sc(5, fam, rng.randint(1, 3)))
        assert all(max_degree(s.edges, red.n) <= 1 for s in red.samples)
        g = random_graph(rng, 6, rng.random())
        red = reduce_is_to_conscheck_is(g, 6, 2)
        assert all(max_degree(s.edges, red.n) <= 1 for s in red.samples)


def random_set_cover(rng):
    u = rng.randint(1, 5)
    m = rng.randint(1, 5)
    fam = [set(rng.sample(range(1, u + 1), rng.randint(1, u))) for _ in range(m)]
    return sc(u, fam, rng.randint(1, 3))


@pytest.mark.parametrize("reduce", [reduce_setcover_to_matching, reduce_setcover_to_path, reduce_setcover_to_is])
def test_set_cover_round_trips(reduce):
    rng = random.Random(reduce.__name__)
    for _ in range(80):
        inst = random_set_cover(rng)
        assert brute_force_set_cover(inst) == solvable(reduce(inst))


def test_is_round_trip():
    rng = random.Random(13)
    for _ in range(150):
        n = rng.randint(1, 6)
        g = random_graph(rng, n, rng.random())
        k = rng.randint(0, n)
        assert brute_force_independent_set(g, n, k) == solvable(reduce_is_to_conscheck_is(g, n, k))


def test_set_cover_validation():
    with pytest.raises(InvalidArgumentError):
        sc(2, [set()], 1)
    with pytest.raises(InvalidArgumentError):
        sc(2, [{3}], 1)
