"""Data model for consistency-checking instances and their verification predicates.

An instance is a vertex set ``{0, ..., n-1}`` together with a list of labeled
edge sets.  A solution is *consistent* when the problem's predicate holds on
exactly the positively labeled samples.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional, Sequence, Union

Pair = tuple[int, int]


class ConsCheckError(Exception):
    """Base class for errors raised by this package."""


class InvalidInstanceError(ConsCheckError, ValueError):
    pass


class InvalidArgumentError(ConsCheckError, ValueError):
    pass


class Problem(enum.Enum):
    TWO_COLORING = "two-coloring"
    SPLIT_GRAPH = "split-graph"
    MATCHING = "matching"
    PATH = "path"
    EDGE_CLIQUE_COVER = "edge-clique-cover"
    INDEPENDENT_SET_DEG = "independent-set-deg"
    DOMINATING_SET_DEG = "dominating-set-deg"

    @property
    def has_k(self) -> bool:
        return self not in (Problem.TWO_COLORING, Problem.SPLIT_GRAPH)

    @property
    def has_d(self) -> bool:
        return self in (Problem.INDEPENDENT_SET_DEG, Problem.DOMINATING_SET_DEG)

    @property
    def solution_kind(self) -> type:
        if self in (Problem.MATCHING, Problem.PATH):
            return PSet
        if self is Problem.EDGE_CLIQUE_COVER:
            return Cover
        return VSet


def pair(u: int, v: int) -> Pair:
    """Canonical (smaller, larger) form of an unordered pair."""
    if u == v:
        raise InvalidArgumentError(f"self-loop {u}-{v}")
    return (u, v) if u < v else (v, u)


def canonical_edges(edges: Iterable[Sequence[int]]) -> tuple[Pair, ...]:
    return tuple(sorted({pair(int(u), int(v)) for u, v in edges}))


def all_pairs(n: int) -> list[Pair]:
    return list(combinations(range(n), 2))


def max_degree(edges: Iterable[Pair], n: int) -> int:
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return max(deg, default=0)


@dataclass(frozen=True)
class Sample:
    """A labeled edge set; ``label`` is 1 for positive and 0 for negative."""

    edges: tuple[Pair, ...]
    label: int

    def __post_init__(self):
        try:
            object.__setattr__(self, "edges", canonical_edges(self.edges))
        except InvalidArgumentError as exc:
            raise InvalidInstanceError(str(exc)) from None
        if self.label not in (0, 1):
            raise InvalidInstanceError(f"label must be 0 or 1, got {self.label!r}")
        object.__setattr__(self, "label", int(self.label))

    @cached_property
    def edge_set(self) -> frozenset[Pair]:
        return frozenset(self.edges)


@dataclass(frozen=True)
class Instance:
    problem: Problem
    n: int
    samples: tuple[Sample, ...]
    k: Optional[int] = None
    d: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "samples", tuple(self.samples))
        p = self.problem
        if self.n < 1:
            raise InvalidInstanceError("n must be at least 1")
        if p.has_k != (self.k is not None):
            raise InvalidInstanceError(f"parameter k is {'required' if p.has_k else 'not allowed'} for {p.value}")
        if p.has_d != (self.d is not None):
            raise InvalidInstanceError(f"parameter d is {'required' if p.has_d else 'not allowed'} for {p.value}")
        if (self.k is not None and self.k < 0) or (self.d is not None and self.d < 0):
            raise InvalidInstanceError("k and d must be nonnegative")
        for i, s in enumerate(self.samples):
            for u, v in s.edges:
                if u < 0 or v >= self.n:
                    raise InvalidInstanceError(f"sample {i}: edge {u}-{v} out of range for n={self.n}")
            if self.d is not None and max_degree(s.edges, self.n) > self.d:
                raise InvalidInstanceError(f"sample {i}: maximum degree exceeds d={self.d}")

    @property
    def t(self) -> int:
        return len(self.samples)

    @property
    def positives(self) -> list[Sample]:
        return [s for s in self.samples if s.label == 1]

    @property
    def negatives(self) -> list[Sample]:
        return [s for s in self.samples if s.label == 0]

    @property
    def t_minus(self) -> int:
        return sum(1 for s in self.samples if s.label == 0)


@dataclass(frozen=True, order=True)
class VSet:
    """A vertex set X."""

    vertices: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(set(self.vertices))))


@dataclass(frozen=True, order=True)
class PSet:
    """A set F of vertex pairs."""

    pairs: tuple[Pair, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "pairs", canonical_edges(self.pairs))


@dataclass(frozen=True, order=True)
class Cover:
    """A family of vertex sets, each standing for the full pair set of a clique."""

    members: tuple[tuple[int, ...], ...] = field(default=())

    def __post_init__(self):
        members = tuple(sorted({tuple(sorted(set(m))) for m in self.members}))
        if len(members) != len(self.members):
            raise InvalidArgumentError("cover members must be pairwise distinct")
        if any(len(m) < 2 for m in members):
            raise InvalidArgumentError("cover members must have at least two vertices")
        object.__setattr__(self, "members", members)

    @classmethod
    def from_edge_sets(cls, edge_sets: Iterable[Iterable[Sequence[int]]]) -> "Cover":
        """Build a cover from edge-set-valued members.

        Each member must be exactly the pair set of the vertices it touches.
        """
        members = []
        for es in edge_sets:
            es = set(canonical_edges(es))
            verts = sorted({x for e in es for x in e})
            if es != set(combinations(verts, 2)):
                raise InvalidArgumentError(f"edge set {sorted(es)} is not the edge set of a clique")
            members.append(tuple(verts))
        return cls(tuple(members))

    def edge_sets(self) -> list[tuple[Pair, ...]]:
        return [tuple(combinations(m, 2)) for m in self.members]

    def covered_edges(self) -> frozenset[Pair]:
        return frozenset(e for m in self.members for e in combinations(m, 2))


Solution = Union[VSet, PSet, Cover]
# None stands for "no consistent solution exists".
Verdict = Optional[Solution]


def _is_path_edge_set(pairs: Sequence[Pair]) -> bool:
    k = len(pairs)
    if k == 0:
        return True
    deg: dict[int, int] = {}
    adj: dict[int, list[int]] = {}
    for u, v in pairs:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    if len(deg) != k + 1 or max(deg.values()) > 2:
        return False
    if sum(1 for x in deg.values() if x == 1) != 2:
        return False
    start = next(iter(deg))
    seen = {start}
    stack = [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == k + 1


def verify(
    problem: Problem,
    solution: Solution,
    edges: Union[frozenset, Iterable[Pair]],
    n: int,
    k: Optional[int] = None,
    d: Optional[int] = None,
) -> bool:
    """Evaluate the problem predicate for ``solution`` on the graph ``(V, edges)``."""
    if not isinstance(solution, problem.solution_kind):
        raise InvalidArgumentError(
            f"{problem.value} expects {problem.solution_kind.__name__}, got {type(solution).__name__}"
        )
    E = edges if isinstance(edges, frozenset) else frozenset(edges)

    if problem is Problem.TWO_COLORING:
        X = set(solution.vertices)
        return all((u in X) != (v in X) for u, v in E)

    if problem is Problem.SPLIT_GRAPH:
        X = solution.vertices
        Xs = set(X)
        if any(e not in E for e in combinations(X, 2)):
            return False
        return all(u in Xs or v in Xs for u, v in E)

    if problem is Problem.MATCHING:
        F = solution.pairs
        if len(F) != k:
            return False
        ends = [x for e in F for x in e]
        return len(set(ends)) == len(ends) and all(e in E for e in F)

    if problem is Problem.PATH:
        F = solution.pairs
        return len(F) == k and all(e in E for e in F) and _is_path_edge_set(F)

    if problem is Problem.EDGE_CLIQUE_COVER:
        # each member is a clique of E and together they produce exactly E
        return len(solution.members) == k and solution.covered_edges() == E

    X = solution.vertices
    if len(X) != k:
        return False
    if problem is Problem.INDEPENDENT_SET_DEG:
        return all(e not in E for e in combinations(X, 2))

    # dominating set
    dominated = set(X)
    Xs = dominated.copy()
    for u, v in E:
        if u in Xs:
            dominated.add(v)
        if v in Xs:
            dominated.add(u)
    return len(dominated) == n


def check_sample(instance: Instance, solution: Solution, sample: Sample) -> bool:
    return verify(instance.problem, solution, sample.edge_set, instance.n, instance.k, instance.d)


def is_consistent(instance: Instance, solution: Solution) -> bool:
    """True iff the predicate holds exactly on the positive samples."""
    for s in instance.samples:
        if check_sample(instance, solution, s) != bool(s.label):
            return False
    return True
