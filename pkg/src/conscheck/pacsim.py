"""Sample-based learning on top of a consistency solver.

A learner draws labelled samples from a hidden finite distribution, asks a
consistency solver for any solution agreeing with all of them, and returns it
as its hypothesis.  Generalization error is computed exactly over the support.
"""

from __future__ import annotations

import csv
import io as _io
import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from .core import Instance, InvalidArgumentError, Pair, Problem, Sample, Solution, Verdict, VSet, canonical_edges, verify

Solver = Callable[[Instance], Verdict]
PROB_TOLERANCE = 1e-9


def log2_hypothesis_count(problem: Problem, n: int, k: Optional[int] = None) -> float:
    """log2 of the number of candidate solutions.

    Vertex-subset problems (including the fixed-size ones) count all 2^n
    subsets; pair-set problems count k-subsets of the n(n-1)/2 pairs; edge
    clique covers count k-families of vertex sets with at least two vertices.
    """
    if problem.solution_kind is VSet:
        return float(n)
    if problem in (Problem.MATCHING, Problem.PATH):
        return math.log2(max(math.comb(n * (n - 1) // 2, k), 1))
    return math.log2(max(math.comb(2**n - n - 1, k), 1))


def occam_sample_bound(epsilon: float, delta: float, log2_hypothesis_count: float) -> int:
    """m = ceil((ln|H| + ln(1/delta)) / epsilon)."""
    if not (0 < epsilon <= 1 and 0 < delta <= 1):
        raise ValueError(f"epsilon and delta must lie in (0, 1], got {epsilon}, {delta}")
    if log2_hypothesis_count < 0:
        raise ValueError("log2_hypothesis_count must be nonnegative")
    raw = (log2_hypothesis_count * math.log(2) + math.log(1 / delta)) / epsilon
    # rounding guards against 3.0000000000000004 turning into 4
    return math.ceil(round(raw, 9))


@dataclass(frozen=True)
class SampleDistribution:
    """Finite distribution over edge sets."""

    support: tuple[tuple[Pair, ...], ...]
    probs: tuple[float, ...]

    def __post_init__(self):
        support = tuple(canonical_edges(e) for e in self.support)
        probs = tuple(float(p) for p in self.probs)
        if len(support) != len(probs):
            raise InvalidArgumentError("support and probabilities differ in length")
        if not support:
            raise InvalidArgumentError("distribution needs a nonempty support")
        if any(p < 0 for p in probs):
            raise InvalidArgumentError("probabilities must be nonnegative")
        if abs(sum(probs) - 1.0) > PROB_TOLERANCE:
            raise InvalidArgumentError(f"probabilities sum to {sum(probs)}, not 1")
        object.__setattr__(self, "support", support)
        object.__setattr__(self, "probs", probs)

    @classmethod
    def uniform(cls, support: Sequence[Sequence[Pair]]) -> "SampleDistribution":
        return cls(tuple(tuple(e) for e in support), tuple(1 / len(support) for _ in support))

    @classmethod
    def point_mass(cls, edges: Sequence[Pair]) -> "SampleDistribution":
        return cls((tuple(edges),), (1.0,))


@dataclass(frozen=True)
class HiddenConcept:
    problem: Problem
    solution: Solution
    n: int
    k: Optional[int] = None
    d: Optional[int] = None

    def __post_init__(self):
        if not isinstance(self.solution, self.problem.solution_kind):
            raise InvalidArgumentError(f"{self.problem.value} concept must be a {self.problem.solution_kind.__name__}")
        if self.problem.has_k != (self.k is not None) or self.problem.has_d != (self.d is not None):
            raise InvalidArgumentError("concept parameters do not match the problem")
        if self.n < 1:
            raise InvalidArgumentError("n must be at least 1")
        sol = self.solution
        verts = (
            sol.vertices if hasattr(sol, "vertices")
            else [x for e in sol.pairs for x in e] if hasattr(sol, "pairs")
            else [x for m in sol.members for x in m]
        )
        if any(v >= self.n for v in verts):
            raise InvalidArgumentError("concept uses a vertex outside 0..n-1")

    def label(self, edges) -> int:
        return int(verify(self.problem, self.solution, frozenset(canonical_edges(edges)), self.n, self.k, self.d))


@dataclass(frozen=True)
class Scenario:
    concept: HiddenConcept
    distribution: SampleDistribution


def draw_labeled_samples(dist: SampleDistribution, concept: HiddenConcept, m: int, seed=0) -> list[Sample]:
    """m independent draws from ``dist``, each labelled by the concept."""
    if m < 0:
        raise InvalidArgumentError("m must be nonnegative")
    rng = np.random.default_rng(seed)
    idx = rng.choice(len(dist.support), size=m, p=np.asarray(dist.probs))
    labels = [concept.label(e) for e in dist.support]
    return [Sample(dist.support[i], labels[i]) for i in idx.tolist()]


def generalization_error(dist: SampleDistribution, concept: HiddenConcept, hypothesis: Verdict) -> float:
    if hypothesis is None:
        return 1.0
    c = concept
    err = sum(
        p
        for e, p in zip(dist.support, dist.probs)
        if verify(c.problem, hypothesis, frozenset(e), c.n, c.k, c.d) != bool(c.label(e))
    )
    return min(max(err, 0.0), 1.0)


@dataclass(frozen=True)
class PacRun:
    run: int
    m: int
    err: float
    tneg: int
    hypothesis: Verdict


def _default_solver(instance: Instance) -> Verdict:
    from .solvers import solve

    return solve(instance)


def pac_learn(
    dist: SampleDistribution,
    concept: HiddenConcept,
    epsilon: float,
    delta: float,
    seed=0,
    solver: Optional[Solver] = None,
    run: int = 0,
) -> PacRun:
    """One learning run: draw an Occam-sized sample, solve, measure error."""
    solver = solver or _default_solver
    m = occam_sample_bound(epsilon, delta, log2_hypothesis_count(concept.problem, concept.n, concept.k))
    drawn = draw_labeled_samples(dist, concept, m, seed)
    unique = tuple(dict.fromkeys(drawn))
    instance = Instance(concept.problem, concept.n, unique, k=concept.k, d=concept.d)
    hypothesis = solver(instance)
    return PacRun(run, m, generalization_error(dist, concept, hypothesis), instance.t_minus, hypothesis)


@dataclass
class PacReport:
    problem: Problem
    epsilon: float
    delta: float
    log2_h: float
    seed: int
    runs: list[PacRun] = field(default_factory=list)

    @property
    def fraction_within(self) -> float:
        if not self.runs:
            return 0.0
        return sum(r.err <= self.epsilon for r in self.runs) / len(self.runs)

    def to_csv(self) -> str:
        buf = _io.StringIO()
        buf.write(f"# problem={self.problem.value} log2H={self.log2_h:.6g} eps={self.epsilon} delta={self.delta} seed={self.seed}\n")
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["run", "m", "err", "tneg"])
        for r in self.runs:
            w.writerow([r.run, r.m, f"{r.err:.6g}", r.tneg])
        buf.write(f"# runs={len(self.runs)} fraction_err_le_eps={self.fraction_within:.4f} target={1 - self.delta:.4f}\n")
        return buf.getvalue()


def simulate(
    scenario: Scenario,
    epsilon: float,
    delta: float,
    runs: int,
    seed: int = 0,
    solver: Optional[Solver] = None,
) -> PacReport:
    """Repeat :func:`pac_learn`; run r draws from the stream seeded by (seed, r)."""
    if runs < 0:
        raise InvalidArgumentError("runs must be nonnegative")
    c = scenario.concept
    report = PacReport(c.problem, epsilon, delta, log2_hypothesis_count(c.problem, c.n, c.k), seed)
    for r in range(runs):
        report.runs.append(pac_learn(scenario.distribution, c, epsilon, delta, [seed, r], solver, run=r))
    return report
