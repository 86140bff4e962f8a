"""Regenerate corpus/: hand-picked instances plus seeded random ones."""

import random
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "tests"))

from conscheck.core import Instance, Problem, Sample, all_pairs  # noqa: E402
from conscheck.io import serialize_instance  # noqa: E402
from conscheck.reductions import (  # noqa: E402
    CnfFormula,
    SetCoverInstance,
    format_dimacs,
    reduce_sat_to_2col,
    reduce_setcover_to_is,
    reduce_setcover_to_matching,
    reduce_setcover_to_path,
)
from instance_gen import random_instance  # noqa: E402

OUT = ROOT / "corpus"
TRI = ((0, 1), (0, 2), (1, 2))


def inst(problem, n, samples, k=None, d=None):
    return Instance(problem, n, tuple(Sample(e, l) for e, l in samples), k=k, d=d)


def main():
    OUT.mkdir(exist_ok=True)
    for old in OUT.glob("*.cc"):
        old.unlink()
    phi = CnfFormula(4, ((1, -2, -3, 4), (-1, 2, -4)))
    (OUT / "fig1.cnf").write_text(format_dimacs(phi))
    sc_no = SetCoverInstance(2, (frozenset({1}), frozenset({2})), 1)
    sc_yes = SetCoverInstance(3, (frozenset({1, 2}), frozenset({3}), frozenset({2})), 2)
    fixed = {
        "fig1": reduce_sat_to_2col(phi),
        "contradiction": inst(Problem.TWO_COLORING, 3, [(((0, 1), (1, 2)), 1), (((0, 1), (1, 2)), 0)]),
        "split_triangle": inst(Problem.SPLIT_GRAPH, 3, [(((0, 1),), 1), (TRI, 0)]),
        "matching_example": inst(Problem.MATCHING, 4, [(((0, 1), (2, 3)), 1), (((0, 1),), 0)], k=1),
        "matching_all_negative": inst(Problem.MATCHING, 4, [(((0, 1),), 0)], k=2),
        "path_triangle": inst(Problem.PATH, 3, [(TRI, 1), (((0, 1), (1, 2)), 0)], k=2),
        "ecc_triangle": inst(Problem.EDGE_CLIQUE_COVER, 3, [(TRI, 1)], k=1),
        "ecc_two_positives": inst(Problem.EDGE_CLIQUE_COVER, 3, [(((0, 1),), 1), (((1, 2),), 1)], k=1),
        "ecc_all_negative": inst(Problem.EDGE_CLIQUE_COVER, 5, [(all_pairs(5), 0)], k=2),
        "is_example": inst(Problem.INDEPENDENT_SET_DEG, 4, [(((0, 1),), 1), (((2, 3),), 0)], k=2, d=1),
        "ds_path": inst(Problem.DOMINATING_SET_DEG, 3, [(((0, 1), (1, 2)), 1), (((0, 1),), 0)], k=1, d=2),
        "ds_kernel_no": inst(
            Problem.DOMINATING_SET_DEG, 10, [(tuple((i, i + 1) for i in range(9)), 1)], k=1, d=2
        ),
        "sc2match_yes": reduce_setcover_to_matching(sc_yes),
        "sc2match_no": reduce_setcover_to_matching(sc_no),
        "sc2path_yes": reduce_setcover_to_path(sc_yes),
        "sc2path_no": reduce_setcover_to_path(sc_no),
        "sc2is_yes": reduce_setcover_to_is(sc_yes),
        "sc2is_no": reduce_setcover_to_is(sc_no),
    }
    for name, instance in fixed.items():
        (OUT / f"{name}.cc").write_text(serialize_instance(instance))
    rng = random.Random(7)
    for p in Problem:
        for i in range(3):
            instance = random_instance(rng, p)
            (OUT / f"random_{p.value}_{i}.cc").write_text(serialize_instance(instance))
    print(f"wrote {len(list(OUT.glob('*.cc')))} instances to {OUT}")


if __name__ == "__main__":
    main()
