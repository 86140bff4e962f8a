"""
Bounded-degree vertex problems and edge clique covers
=====================================================

A dominating set of size k in a graph of max degree d reaches at most k(d+1)
vertices, so larger positive samples are hopeless.  An edge clique cover
determines its graph, so two different positive graphs never share one.

Independent sets are found by guessing how the solution sits inside the
negative samples (a template) and placing it via random coloring.
"""

import random

from conscheck import Instance, Problem, Sample, is_consistent
from conscheck.edge import solve_ecc
from conscheck.oracle import oracle_solve
from conscheck.reductions import SetCoverInstance, reduce_setcover_to_is
from conscheck.vertex import enumerate_templates, solve_ds_degree, solve_is_degree_fpt, theta

ring = [(i, (i + 1) % 9) if i < 8 else (0, 8) for i in range(9)]
ds = Instance(Problem.DOMINATING_SET_DEG, 9, (Sample(ring, 1),), k=2, d=2)
print("2 vertices dominating a 9-cycle:", solve_ds_degree(ds))
ds = Instance(Problem.DOMINATING_SET_DEG, 9, (Sample(ring, 0),), k=2, d=2)
print("...as a negative sample, anything works:", solve_ds_degree(ds))

tri = [(0, 1), (0, 2), (1, 2)]
ecc = Instance(Problem.EDGE_CLIQUE_COVER, 4, (Sample(tri, 1),), k=2)
print("ECC of a triangle with 2 members:", solve_ecc(ecc))
ecc = Instance(Problem.EDGE_CLIQUE_COVER, 4, (Sample(tri, 1), Sample(tri[:2], 1)), k=2)
print("two distinct positives:", solve_ecc(ecc))

print("templates for k=3 and two negatives:", sum(1 for _ in enumerate_templates(3, 2)))
print("list cut-off theta(k=3, d=1, t=2):", theta(3, 1, 2))

# a set cover instance turned into an independent set instance
sc = SetCoverInstance(4, (frozenset({1, 2}), frozenset({3}), frozenset({3, 4})), 2)
inst = reduce_setcover_to_is(sc)
X = oracle_solve(inst)
print(f"set cover -> IS: n={inst.n} k={inst.k} t={inst.t}; oracle {X}")

rng = random.Random(3)
agree = 0
for trial in range(50):
    n = rng.randint(3, 8)
    graphs = [[e for e in ((u, v) for u in range(n) for v in range(u + 1, n)) if rng.random() < 0.15] for _ in range(3)]
    # keep degree <= 2 by dropping offending edges
    clean = []
    for g in graphs:
        deg = [0] * n
        keep = []
        for u, v in g:
            if deg[u] < 2 and deg[v] < 2:
                deg[u] += 1
                deg[v] += 1
                keep.append((u, v))
        clean.append(keep)
    samples = tuple(Sample(g, rng.randint(0, 1)) for g in clean)
    inst = Instance(Problem.INDEPENDENT_SET_DEG, n, samples, k=2, d=2)
    sol = solve_is_degree_fpt(inst, seed=trial)
    agree += (sol is None) == (oracle_solve(inst) is None) and (sol is None or is_consistent(inst, sol))
print(f"IS solver agrees with the oracle on {agree}/50 random instances")
