"""Exact solvers for the vertex-bipartition problems.

* :func:`solve_split` enumerates all splits of one sample (a split graph has
  only polynomially many) and tests each against the remaining samples.
* :func:`solve_two_coloring_fpt` is parameterized by the number of negative
  samples; see its docstring for the outline.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Optional

from .core import Instance, InvalidArgumentError, Pair, Problem, Verdict, VSet, is_consistent
from .oracle import vertex_subsets


@dataclass(frozen=True, order=True)
class Split:
    clique_side: tuple[int, ...]
    independent_side: tuple[int, ...]


def _adjacency(edges: Iterable[Pair], n: int) -> list[set[int]]:
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def _is_split(X: set[int], adj: list[set[int]]) -> bool:
    # clique on X and no edge with both ends outside X
    for x in X:
        if len(adj[x] & X) != len(X) - 1:
            return False
    return all(not (adj[v] - X) for v in range(len(adj)) if v not in X)


def enumerate_splits(edges: Iterable[Pair], n: int) -> list[Split]:
    """All splits (clique side, independent side) of the graph, sorted by clique side."""
    adj = _adjacency(edges, n)
    order = sorted(range(n), key=lambda v: (-len(adj[v]), v))
    deg = [len(adj[v]) for v in order]
    m = max(i for i in range(1, n + 1) if deg[i - 1] >= i - 1)
    if sum(deg[:m]) != m * (m - 1) + sum(deg[m:]):
        return []
    X0 = set(order[:m])
    Y0 = [v for v in range(n) if v not in X0]

    found = set()
    for a in [None, *sorted(X0)]:
        for b in [None, *Y0]:
            X = set(X0)
            if a is not None:
                X.discard(a)
            if b is not None:
                X.add(b)
            if _is_split(X, adj):
                found.add(tuple(sorted(X)))
    return [
        Split(X, tuple(v for v in range(n) if v not in set(X)))
        for X in sorted(found, key=lambda X: (len(X), X))
    ]


def solve_split(instance: Instance) -> Verdict:
    if instance.problem is not Problem.SPLIT_GRAPH:
        raise InvalidArgumentError("solve_split needs a split-graph instance")
    n = instance.n
    positives = instance.positives
    if positives:
        for s in enumerate_splits(positives[0].edges, n):
            cand = VSet(s.clique_side)
            if is_consistent(instance, cand):
                return cand
        return None

    Q = set()
    for s in instance.negatives:
        Q.update(sp.clique_side for sp in enumerate_splits(s.edges, n))
    for X in vertex_subsets(n):
        if X not in Q:
            cand = VSet(X)
            if is_consistent(instance, cand):
                return cand
            raise AssertionError("bipartition outside Q must be consistent")
    return None


# --- 2-coloring parameterized by the number of negative samples ---


class ParityForest:
    """Union-find over components with a parity bit per link.

    The orientation bit of a component says whether its A side receives
    color 0 (bit 0) or color 1 (bit 1).  ``force_same(P, Q)`` requires parts
    ``P = (comp, side)`` and ``Q`` to receive the same color.  Only touched
    components are stored, so a fresh forest costs nothing.
    """

    def __init__(self):
        self.parent: dict[int, int] = {}
        self.parity: dict[int, int] = {}  # parity relative to parent
        self.size: dict[int, int] = {}
        self.feasible = True

    def find(self, c: int) -> tuple[int, int]:
        if c not in self.parent:
            return c, 0
        path = []
        while self.parent.get(c, c) != c:
            path.append(c)
            c = self.parent[c]
        root = c
        # compress, accumulating parity from the top down
        acc = 0
        for node in reversed(path):
            acc ^= self.parity[node]
            self.parity[node] = acc
            self.parent[node] = root
        if not path:
            return root, 0
        return root, self.parity[path[0]]

    def touched(self, c: int) -> bool:
        return c in self.parent

    def union(self, a: int, b: int, rel: int) -> bool:
        """Impose orientation(a) xor orientation(b) == rel."""
        ra, pa = self.find(a)
        rb, pb = self.find(b)
        for r in (ra, rb):
            if r not in self.parent:
                self.parent[r] = r
                self.parity[r] = 0
                self.size[r] = 1
        if ra == rb:
            if pa ^ pb != rel:
                self.feasible = False
            return self.feasible
        if self.size[ra] < self.size[rb]:
            ra, rb, pa, pb = rb, ra, pb, pa
        self.parent[rb] = ra
        self.parity[rb] = pa ^ pb ^ rel
        self.size[ra] += self.size[rb]
        return self.feasible

    def force_same(self, P: tuple[int, int], Q: tuple[int, int]) -> bool:
        (ca, sa), (cb, sb) = P, Q
        return self.union(ca, cb, sa ^ sb)

    def orientation(self, c: int) -> int:
        return self.find(c)[1]

    def copy(self) -> "ParityForest":
        other = ParityForest()
        other.parent = dict(self.parent)
        other.parity = dict(self.parity)
        other.size = dict(self.size)
        other.feasible = self.feasible
        return other


def bipartite_components(edges: Iterable[Pair], n: int) -> Optional[tuple[list[int], list[int]]]:
    """Component index and side (0 = part A, holding the smallest vertex) per vertex.

    Returns None if some component contains an odd cycle.
    """
    adj = _adjacency(edges, n)
    comp = [-1] * n
    side = [0] * n
    c = 0
    for s in range(n):
        if comp[s] != -1:
            continue
        comp[s] = c
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if comp[w] == -1:
                    comp[w] = c
                    side[w] = side[u] ^ 1
                    stack.append(w)
                elif side[w] == side[u]:
                    return None
        c += 1
    return comp, side


Part = tuple[int, int]
Signature = frozenset  # of (Part, Part) with the smaller part first


def signature(edges: Iterable[Pair], comp: list[int], side: list[int]) -> Signature:
    pairs = set()
    for u, v in edges:
        P, Q = (comp[u], side[u]), (comp[v], side[v])
        pairs.add((P, Q) if P <= Q else (Q, P))
    return frozenset(pairs)


def small_signature_threshold(t_minus: int) -> int:
    return 16 * t_minus * t_minus


def solve_two_coloring_fpt(instance: Instance) -> Verdict:
    """Find X such that (X, V\\X) properly 2-colors exactly the positive samples.

    G+ is the union of positive samples, split into bipartite components with
    parts A_j, B_j.  Each negative sample is abstracted to its signature, the
    set of part pairs its edges join.  The negative is refuted by a coloring
    iff some signature pair is monochromatic.  Small signatures (at most
    16 t-^2 pairs) are handled by branching on which pair is forced
    monochromatic; large ones touch more than 2 t- components, so a pair with
    a still-free component can always be found and forced afterwards.
    """
    if instance.problem is not Problem.TWO_COLORING:
        raise InvalidArgumentError("solve_two_coloring_fpt needs a two-coloring instance")
    n = instance.n
    e_plus = {e for s in instance.positives for e in s.edges}
    parts = bipartite_components(e_plus, n)
    if parts is None:
        return None
    comp, side = parts

    negatives = instance.negatives
    t_minus = len(negatives)
    threshold = small_signature_threshold(t_minus)
    sigs = [signature(s.edges, comp, side) for s in negatives]
    small = [sorted(S) for S in sigs if len(S) <= threshold]
    large = [sorted(S) for S in sigs if len(S) > threshold]

    def build(forest: ParityForest) -> VSet:
        orient = {}
        X = []
        for v in range(n):
            c = comp[v]
            if c not in orient:
                orient[c] = forest.orientation(c)
            if orient[c] ^ side[v] == 0:
                X.append(v)
        return VSet(tuple(X))

    for choice in product(*small):
        forest = ParityForest()
        for P, Q in choice:
            if not forest.force_same(P, Q):
                break
        if not forest.feasible:
            continue
        # every small choice marks both its components as used
        ok = True
        for S in large:
            pick = None
            for P, Q in S:
                if P == Q:
                    pick = (P, Q)
                    break
                if P[0] == Q[0]:
                    continue
                if not forest.touched(P[0]) or not forest.touched(Q[0]):
                    pick = (P, Q)
                    break
            if pick is None:
                ok = False
                break
            if pick[0] != pick[1]:
                # an edge inside one part is monochromatic under every proper coloring
                forest.force_same(*pick)
        if not ok:
            continue
        cand = build(forest)
        if is_consistent(instance, cand):
            return cand
    return None
