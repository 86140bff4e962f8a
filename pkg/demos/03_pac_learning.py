"""
Learning a hidden concept from labeled graphs
=============================================

A hidden dominating set labels graphs drawn from a fixed distribution.  Draw
m samples (m from the Occam bound), find any consistent hypothesis, and
measure its exact error over the support.  Repeat over seeds and count how
often the error stays below epsilon.
"""

import numpy as np

from conscheck import Instance, solve
from conscheck.io import load_bundled_scenario
from conscheck.pacsim import (
    draw_labeled_samples,
    generalization_error,
    log2_hypothesis_count,
    occam_sample_bound,
    simulate,
)

scenario = load_bundled_scenario("dominating-set-deg")
concept, dist = scenario.concept, scenario.distribution
print(f"hidden concept {concept.solution} on n={concept.n}, k={concept.k}, d={concept.d}")
print(f"support of {len(dist.support)} graphs, largest mass {max(dist.probs):.3f}")

bits = log2_hypothesis_count(concept.problem, concept.n, concept.k)
for eps in (0.4, 0.2, 0.1, 0.05):
    print(f"eps=delta={eps:<5} m = {occam_sample_bound(eps, eps, bits)}")

report = simulate(scenario, 0.2, 0.2, runs=200, seed=11)
errs = np.array([r.err for r in report.runs])
print(f"200 runs: fraction err<=0.2 is {report.fraction_within:.3f}; mean err {errs.mean():.4f}, max {errs.max():.4f}")

# with few samples the guarantee is gone; compare m=2 by hand
bad = 0
for seed in range(200):
    drawn = list(dict.fromkeys(draw_labeled_samples(dist, concept, 2, seed=[seed, 0])))
    inst = Instance(concept.problem, concept.n, tuple(drawn), k=concept.k, d=concept.d)
    bad += generalization_error(dist, concept, solve(inst)) > 0.2
print(f"m=2: fraction err<=0.2 is {1 - bad / 200:.3f}")

# the matching scenario, written as CSV
print(simulate(load_bundled_scenario("matching"), 0.2, 0.2, runs=5, seed=1).to_csv())
