"""
Color coding for matchings and paths
====================================

A hidden k-matching touches 2k vertices.  Color the vertices at random with
2k colors; with probability (2k)!/(2k)^(2k) the hidden vertices get distinct
colors, and a DP over color subsets then finds a matching that avoids every
negative sample.
"""

import math
import time

import numpy as np

from conscheck import Instance, Problem, Sample, is_consistent
from conscheck.coloring import colorful_probability, default_trials
from conscheck.edge import solve_matching_cc, solve_path_cc

# how often a fixed set of 2k vertices is colorful
rng = np.random.default_rng(0)
for k in (1, 2, 3):
    c = 2 * k
    draws = np.sort(rng.integers(0, c, size=(200_000, c)), axis=1)
    freq = np.mean(np.all(np.diff(draws, axis=1) > 0, axis=1))
    print(f"k={k}: colorful freq {freq:.4f}  exact {colorful_probability(c):.4f}  trials used {default_trials(c)}")

# a positive graph and two negatives; the solution must escape both
edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]
inst = Instance(
    Problem.MATCHING,
    6,
    (
        Sample(edges, 1),
        Sample([(0, 1), (2, 3), (4, 5)], 0),
        Sample([(1, 2), (3, 4), (5, 0)], 0),
    ),
    k=2,
)
for mode in ("random", "exhaustive"):
    t0 = time.perf_counter()
    M = solve_matching_cc(inst, mode=mode, seed=3)
    print(f"matching ({mode}): {M}  consistent={is_consistent(inst, M)}  {1e3 * (time.perf_counter() - t0):.1f} ms")

# the same positive graph, now asking for a 3-edge path avoiding a cycle sample
path_inst = Instance(Problem.PATH, 6, (Sample(edges, 1), Sample(edges[:6], 0)), k=3)
P = solve_path_cc(path_inst, seed=1)
print("path:", P, "consistent:", is_consistent(path_inst, P))

# with T trials a hidden solution is missed with probability (1 - p)^T
p = colorful_probability(6)
T = default_trials(6)
print(f"k=3: miss probability after {T} trials is about e^{T * math.log1p(-p):.1f}")
