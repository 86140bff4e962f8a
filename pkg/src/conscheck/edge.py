"""Exact solvers for Matching, (k-)Path and Edge Clique Cover.

Matching and Path reduce to one graph ``E`` (the intersection of the
positive samples): a solution is a size-k matching or k-edge path in ``E``
which, for every negative sample, uses at least one edge outside it.  Both
are found by color coding with a dynamic program over
``(color set, set of negatives dealt with)``.
"""

from __future__ import annotations

from itertools import combinations
from typing import Optional, Sequence

import networkx as nx

from .coloring import coloring_family
from .core import Cover, Instance, InvalidArgumentError, Pair, Problem, PSet, Verdict, all_pairs, is_consistent
from .oracle import clique_candidates

EdgeInfo = list[tuple[int, int, int]]  # (u, v, beta mask)


def intersect_positives(instance: Instance) -> tuple[Pair, ...]:
    positives = instance.positives
    if not positives:
        raise InvalidArgumentError("instance has no positive sample")
    E = set(positives[0].edges)
    for s in positives[1:]:
        E &= s.edge_set
    return tuple(sorted(E))


def _edge_info(E: Sequence[Pair], negatives: Sequence[frozenset]) -> EdgeInfo:
    # beta(e): negatives that do not contain e, i.e. are "dealt with" by e
    out = []
    for u, v in E:
        b = 0
        for i, neg in enumerate(negatives):
            if (u, v) not in neg:
                b |= 1 << i
        out.append((u, v, b))
    return out


def _as_sets(negatives) -> list[frozenset]:
    return [x if isinstance(x, frozenset) else frozenset(x) for x in negatives]


def _matching_table(info: EdgeInfo, k: int, t_minus: int, coloring: Sequence[int]) -> Optional[list[Pair]]:
    full_c = (1 << (2 * k)) - 1
    full_i = (1 << t_minus) - 1
    # one representative edge per (color pair, beta)
    groups: dict[tuple[int, int], dict[int, Pair]] = {}
    for u, v, b in info:
        cu, cv = coloring[u], coloring[v]
        if cu == cv:
            continue
        key = (1 << cu) | (1 << cv)
        groups.setdefault(key, {}).setdefault(b, (u, v))
    trans = [(bits, b, e) for bits, d in groups.items() for b, e in d.items()]

    # alpha(C, I) = 1 iff (C, I) is a key; value is the parent pointer
    alpha: dict[tuple[int, int], Optional[tuple[int, int, Pair]]] = {(0, 0): None}
    layer = [(0, 0)]
    for _ in range(k):
        nxt = []
        for C, I in layer:
            for bits, b, e in trans:
                if bits & C:
                    continue
                state = (C | bits, I | b)
                if state not in alpha:
                    alpha[state] = (C, I, e)
                    nxt.append(state)
        layer = nxt
    goal = (full_c, full_i)
    if goal not in alpha:
        return None
    F = []
    state = goal
    while alpha[state] is not None:
        C, I, e = alpha[state]
        F.append(e)
        state = (C, I)
    return sorted(F)


def dp_matching(E: Sequence[Pair], negatives, k: int, coloring: Sequence[int]) -> Optional[PSet]:
    """Colorful k-matching in E that leaves no negative sample containing all its edges.

    ``coloring`` maps each vertex to one of 2k colors.  Returns None when no
    such matching is colorful under ``coloring``.
    """
    negs = _as_sets(negatives)
    F = _matching_table(_edge_info(E, negs), k, len(negs), coloring)
    return None if F is None else PSet(tuple(F))


def _path_table(info: EdgeInfo, n: int, k: int, t_minus: int, coloring: Sequence[int]) -> Optional[list[Pair]]:
    full_c = (1 << (k + 1)) - 1
    full_i = (1 << t_minus) - 1
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for u, v, b in info:
        adj[u].append((v, b))
        adj[v].append((u, b))

    alpha: dict[tuple[int, int, int], Optional[tuple[int, int, int]]] = {}
    layer = []
    for v in range(n):
        state = (v, 1 << coloring[v], 0)
        alpha[state] = None
        layer.append(state)
    for _ in range(k):
        nxt = []
        for u, C, I in layer:
            for v, b in adj[u]:
                bit = 1 << coloring[v]
                if bit & C:
                    continue
                state = (v, C | bit, I | b)
                if state not in alpha:
                    alpha[state] = (u, C, I)
                    nxt.append(state)
        layer = nxt
    for v in range(n):
        state = (v, full_c, full_i)
        if state in alpha:
            F = []
            while alpha[state] is not None:
                prev = alpha[state]
                a, b = state[0], prev[0]
                F.append((a, b) if a < b else (b, a))
                state = prev
            return sorted(F)
    return None


def dp_path(E: Sequence[Pair], negatives, k: int, coloring: Sequence[int], n: Optional[int] = None) -> Optional[PSet]:
    """Colorful path with k edges in E that leaves no negative sample containing all its edges.

    ``coloring`` maps each vertex to one of k+1 colors.
    """
    negs = _as_sets(negatives)
    if n is None:
        n = len(coloring)
    F = _path_table(_edge_info(E, negs), n, k, len(negs), coloring)
    return None if F is None else PSet(tuple(F))


def _first_consistent(instance: Instance, candidates) -> Verdict:
    for cand in candidates:
        if is_consistent(instance, cand):
            return cand
    return None


def _color_coding(instance: Instance, table, colors: int, mode: str, seed: int, trials: Optional[int]) -> Verdict:
    E = intersect_positives(instance)
    negs = [s.edge_set for s in instance.negatives]
    info = _edge_info(E, negs)
    relevant = sorted({x for e in E for x in e}) if mode == "exhaustive" else None
    for col in coloring_family(mode, instance.n, colors, seed, trials, vertices=relevant):
        F = table(info, col)
        if F is not None:
            cand = PSet(tuple(F))
            if is_consistent(instance, cand):
                return cand
    return None


def solve_matching_cc(instance: Instance, mode: str = "random", seed: int = 0, trials: Optional[int] = None) -> Verdict:
    if instance.problem is not Problem.MATCHING:
        raise InvalidArgumentError("solve_matching_cc needs a matching instance")
    if mode not in ("random", "exhaustive"):
        raise InvalidArgumentError(f"unknown mode {mode!r}")
    n, k = instance.n, instance.k
    if not instance.positives:
        return _all_negative_matching(instance)
    if 2 * k > n:
        return None
    t_minus = instance.t_minus
    return _color_coding(
        instance, lambda info, col: _matching_table(info, k, t_minus, col), 2 * k, mode, seed, trials
    )


def _all_negative_matching(instance: Instance) -> Verdict:
    n, k = instance.n, instance.k
    pairs = all_pairs(n)
    if k > len(pairs):
        return None
    if k >= 2 and n >= 3:
        # two pairs sharing vertex 0 are never a matching
        rest = [p for p in pairs if p not in ((0, 1), (0, 2))]
        cand = PSet(((0, 1), (0, 2), *rest[: k - 2]))
        if is_consistent(instance, cand):
            return cand
    if k == 1:
        return _first_consistent(instance, (PSet((p,)) for p in pairs))
    return _first_consistent(instance, (PSet(F) for F in combinations(pairs, k)))


def solve_path_cc(instance: Instance, mode: str = "random", seed: int = 0, trials: Optional[int] = None) -> Verdict:
    if instance.problem is not Problem.PATH:
        raise InvalidArgumentError("solve_path_cc needs a path instance")
    if mode not in ("random", "exhaustive"):
        raise InvalidArgumentError(f"unknown mode {mode!r}")
    n, k = instance.n, instance.k
    if not instance.positives:
        return _all_negative_path(instance)
    if k + 1 > n:
        return None
    t_minus = instance.t_minus
    return _color_coding(
        instance, lambda info, col: _path_table(info, n, k, t_minus, col), k + 1, mode, seed, trials
    )


def _all_negative_path(instance: Instance) -> Verdict:
    n, k = instance.n, instance.k
    pairs = all_pairs(n)
    if k > len(pairs):
        return None
    if n >= 4 and k >= 2:
        # two disjoint pairs plus pairs at vertex 0; not a path unless k == 3
        rest = [p for p in pairs if p[0] == 0 and p != (0, 1)]
        rest += [p for p in pairs if p[0] != 0 and p != (2, 3)]
        cand = PSet(((0, 1), (2, 3), *rest[: k - 2]))
        if is_consistent(instance, cand):
            return cand
    return _first_consistent(instance, (PSet(F) for F in combinations(pairs, k)))


# --- edge clique cover ---


def _twin_classes(E: Sequence[Pair], n: int) -> list[tuple[int, ...]]:
    """Classes of non-isolated vertices with equal closed neighborhoods."""
    closed = [{v} for v in range(n)]
    for u, v in E:
        closed[u].add(v)
        closed[v].add(u)
    classes: dict[frozenset, list[int]] = {}
    for v in range(n):
        if len(closed[v]) > 1:
            classes.setdefault(frozenset(closed[v]), []).append(v)
    return sorted(tuple(c) for c in classes.values())


def _branch_cover(edges: list[Pair], cliques: list[frozenset], budget: int) -> Optional[list[frozenset]]:
    if not edges:
        return []
    if budget == 0:
        return None
    u, v = edges[0]
    for Q in cliques:
        if u in Q and v in Q:
            rest = [e for e in edges if not (e[0] in Q and e[1] in Q)]
            sub = _branch_cover(rest, cliques, budget - 1)
            if sub is not None:
                return [Q, *sub]
    return None


def clique_cover(E: Sequence[Pair], n: int, k: int) -> Optional[Cover]:
    """Exactly k distinct cliques (size >= 2) whose pair sets union to E, or None.

    Isolated vertices are dropped and true twins merged; a yes-instance then
    has at most 2^k classes.  A cover with at most k cliques is searched by
    branching on the first uncovered edge over the maximal cliques holding
    it, lifted back through the twin classes and padded with further cliques
    of E up to size k.
    """
    E = sorted(E)
    if k == 0:
        return Cover(()) if not E else None
    if not E:
        return None
    classes = _twin_classes(E, n)
    if len(classes) > 2**k:
        return None
    rep_of = {v: c[0] for c in classes for v in c}
    members_of = {c[0]: c for c in classes}
    reduced = sorted({(rep_of[u], rep_of[v]) for u, v in E if rep_of[u] != rep_of[v]})

    touched = {x for e in reduced for x in e}
    # a class with no neighbour outside itself can only be covered by itself
    forced = [frozenset(c) for c in classes if c[0] not in touched]
    budget = k - len(forced)
    if budget < 0:
        return None
    H = nx.Graph(reduced)
    cliques = sorted((frozenset(q) for q in nx.find_cliques(H)), key=lambda q: (-len(q), sorted(q)))
    found = _branch_cover(reduced, cliques, budget)
    if found is None:
        return None
    members = {frozenset(x for r in Q for x in members_of[r]) for Q in found}
    members.update(forced)

    if len(members) < k:
        G = nx.Graph(E)
        for q in nx.enumerate_all_cliques(G):
            if len(members) == k:
                break
            if len(q) >= 2:
                members.add(frozenset(q))
        if len(members) < k:
            return None
    return Cover(tuple(tuple(sorted(m)) for m in members))


def solve_ecc(instance: Instance) -> Verdict:
    if instance.problem is not Problem.EDGE_CLIQUE_COVER:
        raise InvalidArgumentError("solve_ecc needs an edge-clique-cover instance")
    n, k = instance.n, instance.k
    positive_sets = {s.edge_set for s in instance.positives}
    if len(positive_sets) >= 2:
        # a cover determines the one graph it covers
        return None
    if positive_sets:
        (E1,) = positive_sets
        if any(s.edge_set == E1 for s in instance.negatives):
            return None
        cand = clique_cover(sorted(E1), n, k)
        if cand is not None and is_consistent(instance, cand):
            return cand
        return None
    return _all_negative_ecc(instance)


def _all_negative_ecc(instance: Instance) -> Verdict:
    n, k = instance.n, instance.k
    if k == 0:
        cand = Cover(())
        return cand if is_consistent(instance, cand) else None
    # families of k single pairs cover pairwise distinct graphs, so at most
    # t of them can be refuted
    tries = 0
    for F in combinations(all_pairs(n), k):
        cand = Cover(F)
        if is_consistent(instance, cand):
            return cand
        tries += 1
        if tries > instance.t:
            return None
    # fewer single-pair families than samples: only tiny n gets here
    return _first_consistent(instance, (Cover(f) for f in combinations(clique_candidates(n), k)))
