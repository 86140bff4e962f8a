"""Exact solvers for Dominating Set and Independent Set on bounded-degree samples."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import comb
from typing import Iterator, Optional, Sequence

from .coloring import coloring_family
from .core import Instance, InvalidArgumentError, Pair, Problem, Verdict, VSet, is_consistent

THETA_CAP = 2**63


def solve_ds_degree(instance: Instance) -> Verdict:
    """Kernel of size k(d+1): each solution vertex dominates itself and at most d others."""
    if instance.problem is not Problem.DOMINATING_SET_DEG:
        raise InvalidArgumentError("solve_ds_degree needs a dominating-set-deg instance")
    n, k, d = instance.n, instance.k, instance.d
    if k > n:
        return None
    if n > k * (d + 1):
        if instance.positives:
            return None
        cand = VSet(tuple(range(k)))
        return cand if is_consistent(instance, cand) else None
    for X in combinations(range(n), k):
        cand = VSet(X)
        if is_consistent(instance, cand):
            return cand
    return None


@dataclass(frozen=True)
class Template:
    """A k-vertex graph whose edges carry nonempty sets of negative-sample indices.

    Labels are bitmasks over the negative samples.  Template vertex ``i``
    stands for the solution vertex that receives color ``i``.
    """

    k: int
    labels: tuple[tuple[Pair, int], ...]

    @property
    def label_of(self) -> dict[Pair, int]:
        return dict(self.labels)

    def components(self) -> list[tuple[int, ...]]:
        parent = list(range(self.k))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for (i, j), _ in self.labels:
            parent[find(i)] = find(j)
        groups: dict[int, list[int]] = {}
        for i in range(self.k):
            groups.setdefault(find(i), []).append(i)
        return sorted(tuple(g) for g in groups.values())


def enumerate_templates(k: int, t_minus: int) -> Iterator[Template]:
    """All edge-labelled k-vertex graphs in which every negative index occurs."""
    if k < 1:
        raise InvalidArgumentError("templates need k >= 1")
    pairs = list(combinations(range(k), 2))
    full = (1 << t_minus) - 1
    options = [0, *range(1, full + 1)]  # 0 = no edge
    for choice in product(options, repeat=len(pairs)):
        used = 0
        for m in choice:
            used |= m
        if used != full:
            continue
        yield Template(k, tuple((p, m) for p, m in zip(pairs, choice) if m))


def theta(k: int, d: int, t: int) -> Optional[int]:
    """Small/large cut-off for placement lists; None when it exceeds 63 bits."""
    base = k * d * t * (d * t) ** k
    total = 0
    for i in range(1, k + 1):
        total += comb(base, i)
        if total >= THETA_CAP:
            return None
    return total


class _Context:
    """Adjacency lookups for one instance."""

    def __init__(self, instance: Instance):
        n = instance.n
        self.n = n
        self.pos_adj = [set() for _ in range(n)]
        for s in instance.positives:
            for u, v in s.edges:
                self.pos_adj[u].add(v)
                self.pos_adj[v].add(u)
        negs = instance.negatives
        self.neg_adj = [[[] for _ in range(n)] for _ in negs]
        self.neg_mask: dict[Pair, int] = {}
        for z, s in enumerate(negs):
            for u, v in s.edges:
                self.neg_adj[z][u].append(v)
                self.neg_adj[z][v].append(u)
                self.neg_mask[(u, v)] = self.neg_mask.get((u, v), 0) | (1 << z)

    def mask(self, u: int, v: int) -> int:
        return self.neg_mask.get((u, v) if u < v else (v, u), 0)

    def realizable_labels(self) -> set[int]:
        return {m for (u, v), m in self.neg_mask.items() if v not in self.pos_adj[u]}


def _spanning_order(template: Template, component: Sequence[int]) -> list[tuple[int, Optional[int]]]:
    """Nodes of the component in BFS order, each with its tree parent."""
    labels = template.label_of
    order = [(component[0], None)]
    seen = {component[0]}
    i = 0
    while i < len(order):
        p = order[i][0]
        for q in component:
            if q not in seen and ((p, q) if p < q else (q, p)) in labels:
                seen.add(q)
                order.append((q, p))
        i += 1
    return order


def _place(template: Template, component: Sequence[int], coloring: Sequence[int], ctx: _Context, by_color) -> list[tuple[int, ...]]:
    labels = template.label_of
    order = _spanning_order(template, component)
    assign: dict[int, int] = {}
    out = []

    def fits(node: int, w: int) -> bool:
        for r, x in assign.items():
            if w in ctx.pos_adj[x]:
                return False
            want = labels.get((r, node) if r < node else (node, r), 0)
            if ctx.mask(w, x) != want:
                return False
        return True

    def rec(i: int):
        if i == len(order):
            out.append(tuple(assign[c] for c in component))
            return
        node, parent = order[i]
        if parent is None:
            cands = by_color[node]
        else:
            Z = labels[(parent, node) if parent < node else (node, parent)]
            z = (Z & -Z).bit_length() - 1
            cands = [w for w in ctx.neg_adj[z][assign[parent]] if coloring[w] == node]
        for w in cands:
            if fits(node, w):
                assign[node] = w
                rec(i + 1)
                del assign[node]

    rec(0)
    return out


def _by_color(coloring: Sequence[int], k: int) -> list[list[int]]:
    by = [[] for _ in range(k)]
    for v, c in enumerate(coloring):
        if c < k:
            by[c].append(v)
    return by


def place_component(template: Template, component: Sequence[int], coloring: Sequence[int], instance: Instance) -> list[tuple[int, ...]]:
    """Vertex tuples realizing one template component under ``coloring``.

    A tuple assigns to each template node a vertex of that node's color such
    that labelled template edges are adjacent in exactly the labelled negative
    samples, non-edges are adjacent in none, and all pairs are independent in
    every positive sample.
    """
    ctx = _Context(instance)
    return _place(template, tuple(component), coloring, ctx, _by_color(coloring, template.k))


def solve_is_degree_fpt(instance: Instance, mode: str = "random", seed: int = 0, trials: Optional[int] = None) -> Verdict:
    """Independent Set consistency, FPT in k + d + t.

    For every template and every coloring of the family, placement lists are
    built per template component.  Small lists are branched on exhaustively;
    each large list is then scanned for any placement independent (in the
    positive samples) from what has been chosen so far.
    """
    if instance.problem is not Problem.INDEPENDENT_SET_DEG:
        raise InvalidArgumentError("solve_is_degree_fpt needs an independent-set-deg instance")
    if mode not in ("random", "exhaustive"):
        raise InvalidArgumentError(f"unknown mode {mode!r}")
    n, k, d = instance.n, instance.k, instance.d
    if k > n:
        return None
    if k == 0:
        cand = VSet(())
        return cand if is_consistent(instance, cand) else None

    ctx = _Context(instance)
    realizable = ctx.realizable_labels()
    # a template edge whose label no vertex pair realizes has empty placement lists
    templates = [
        (T, T.components())
        for T in enumerate_templates(k, instance.t_minus)
        if all(m in realizable for _, m in T.labels)
    ]
    if not templates:
        return None
    cutoff = theta(k, d, instance.t)

    for coloring in coloring_family(mode, n, k, seed, trials):
        by_color = _by_color(coloring, k)
        if any(not b for b in by_color):
            continue
        cache: dict[tuple, list[tuple[int, ...]]] = {}
        for T, comps in templates:
            lists = []
            for C in comps:
                key = (C, tuple(lab for lab in T.labels if lab[0][0] in C))
                if key not in cache:
                    cache[key] = _place(T, C, coloring, ctx, by_color)
                lists.append(cache[key])
            if any(not L for L in lists):
                continue
            found = _assemble(instance, ctx, lists, cutoff)
            if found is not None:
                return found
    return None


def _independent(ctx: _Context, chosen: Sequence[int], tup: Sequence[int]) -> bool:
    return all(w not in ctx.pos_adj[x] for x in chosen for w in tup)


def _assemble(instance: Instance, ctx: _Context, lists, cutoff: Optional[int]) -> Verdict:
    small = [L for L in lists if cutoff is None or len(L) <= cutoff]
    large = [L for L in lists if cutoff is not None and len(L) > cutoff]
    for picks in product(*small):
        chosen: list[int] = []
        ok = True
        for tup in picks:
            if not _independent(ctx, chosen, tup):
                ok = False
                break
            chosen.extend(tup)
        if not ok:
            continue
        for L in large:
            for tup in L:
                if _independent(ctx, chosen, tup):
                    chosen.extend(tup)
                    break
            else:
                ok = False
                break
        if not ok:
            continue
        cand = VSet(tuple(chosen))
        if is_consistent(instance, cand):
            return cand
    return None
