"""Instance generators built from classical hard problems.

Each generator has a fixed vertex layout (documented per function), so the
same source instance always yields byte-identical output.  The ``brute_force_*``
functions decide the source problems directly and serve as the other half of
round-trip checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Sequence

from .core import Instance, InvalidArgumentError, Pair, Problem, Sample, all_pairs, canonical_edges


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        clauses = tuple(tuple(c) for c in self.clauses)
        for c in clauses:
            if not c:
                raise InvalidArgumentError("empty clause")
            for lit in c:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise InvalidArgumentError(f"literal {lit} out of range for {self.num_vars} variables")
        object.__setattr__(self, "clauses", clauses)


def parse_dimacs(text: str) -> CnfFormula:
    num_vars = None
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            fields = line.split()
            if len(fields) != 4 or fields[1] != "cnf":
                raise InvalidArgumentError(f"line {lineno}: bad problem line {line!r}")
            num_vars = int(fields[2])
            continue
        if num_vars is None:
            raise InvalidArgumentError(f"line {lineno}: clause before problem line")
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            else:
                current.append(lit)
    if current:
        clauses.append(tuple(current))
    if num_vars is None:
        raise InvalidArgumentError("missing 'p cnf' line")
    return CnfFormula(num_vars, tuple(clauses))


def format_dimacs(phi: CnfFormula) -> str:
    lines = [f"p cnf {phi.num_vars} {len(phi.clauses)}"]
    lines += [" ".join(map(str, c)) + " 0" for c in phi.clauses]
    return "\n".join(lines) + "\n"


def brute_force_sat(phi: CnfFormula) -> bool:
    for bits in product((False, True), repeat=phi.num_vars):
        if all(any(bits[abs(l) - 1] == (l > 0) for l in c) for c in phi.clauses):
            return True
    return False


def reduce_sat_to_2col(phi: CnfFormula) -> Instance:
    """2-Coloring instance solvable iff ``phi`` is satisfiable.

    Layout: t = 0, f = 1, x_i = i + 1.  One positive sample {tf}; per clause a
    negative sample joining x_i to t for each literal x_i and to f for each
    literal not-x_i.
    """
    samples = [Sample(((0, 1),), 1)]
    for c in phi.clauses:
        samples.append(Sample(tuple((0 if l > 0 else 1, abs(l) + 1) for l in c), 0))
    return Instance(Problem.TWO_COLORING, phi.num_vars + 2, tuple(samples))


@dataclass(frozen=True)
class SetCoverInstance:
    """Universe {1..universe}, a family of nonempty subsets, and a budget k."""

    universe: int
    family: tuple[frozenset, ...]
    k: int

    def __post_init__(self):
        fam = tuple(frozenset(s) for s in self.family)
        if any(not s for s in fam):
            raise InvalidArgumentError("set-cover subsets must be nonempty")
        if any(x < 1 or x > self.universe for s in fam for x in s):
            raise InvalidArgumentError("set-cover element out of range")
        if self.k < 1:
            raise InvalidArgumentError("set-cover budget must be at least 1")
        object.__setattr__(self, "family", fam)

    @property
    def m(self) -> int:
        return len(self.family)


def brute_force_set_cover(sc: SetCoverInstance) -> bool:
    """Is the universe the union of at most k family members?"""
    U = set(range(1, sc.universe + 1))
    for r in range(0, min(sc.k, sc.m) + 1):
        for pick in combinations(sc.family, r):
            if set().union(*pick) >= U:
                return True
    return False


def reduce_setcover_to_matching(sc: SetCoverInstance) -> Instance:
    """Matching instance with k stars as its unique positive sample.

    Layout: star i (0-based) has center i*(m+1) and leaf i*(m+1)+1+l for set l.
    For each element u_j a negative sample holds every pair except the star
    edges to leaves of sets containing u_j.
    """
    m, k = sc.m, sc.k
    n = k * (m + 1)
    star = [(i * (m + 1), i * (m + 1) + 1 + l) for i in range(k) for l in range(m)]
    samples = [Sample(tuple(star), 1)]
    everything = all_pairs(n)
    for j in range(1, sc.universe + 1):
        removed = {(i * (m + 1), i * (m + 1) + 1 + l) for i in range(k) for l, F in enumerate(sc.family) if j in F}
        samples.append(Sample(tuple(e for e in everything if e not in removed), 0))
    return Instance(Problem.MATCHING, n, tuple(samples), k=k)


def path_layout(m: int, k: int) -> list[list[int]]:
    """Vertex ids of the 2k+1 layers: odd layers one vertex, even layers m vertices."""
    layers, nxt = [], 0
    for j in range(1, 2 * k + 2):
        size = 1 if j % 2 else m
        layers.append(list(range(nxt, nxt + size)))
        nxt += size
    return layers


def reduce_setcover_to_path(sc: SetCoverInstance, anchor_endpoints: bool = True) -> Instance:
    """Path instance with parameter 2k on a layered positive sample.

    Layers s_1, S_2, s_3, ..., s_{2k+1} are numbered consecutively (see
    :func:`path_layout`); consecutive layers are completely joined.  For each
    element u_j a negative sample holds every pair not incident to a layer
    vertex standing for a set that contains u_j.

    The layered graph also holds 2k-edge paths that do not run from s_1 to
    s_{2k+1} (for instance p - s_1 - p'), which use k+1 set vertices.  With
    ``anchor_endpoints`` two more negative samples, each isolating one of
    s_1 and s_{2k+1}, rule these out.
    """
    m, k = sc.m, sc.k
    layers = path_layout(m, k)
    n = layers[-1][-1] + 1
    positive = [(u, v) for a, b in zip(layers, layers[1:]) for u in a for v in b]
    samples = [Sample(tuple(positive), 1)]
    everything = all_pairs(n)
    for j in range(1, sc.universe + 1):
        dead = {layers[2 * r + 1][l] for r in range(k) for l, F in enumerate(sc.family) if j in F}
        samples.append(Sample(tuple(e for e in everything if not (set(e) & dead)), 0))
    if anchor_endpoints:
        for end in (layers[0][0], layers[-1][0]):
            samples.append(Sample(tuple(e for e in everything if end not in e), 0))
    return Instance(Problem.PATH, n, tuple(samples), k=2 * k)


def reduce_setcover_to_is(sc: SetCoverInstance) -> Instance:
    """All-negative Independent Set instance with maximum degree 1.

    Layout: set i has vertices 2i and 2i+1.  Element u_j gives a negative
    sample with edge (2i, 2i+1) for every set i containing u_j.  The solution
    size is twice the budget, with the budget capped at the family size (a
    cover never needs more than m sets, and 2k > 2m vertices cannot exist).
    """
    m = sc.m
    samples = []
    for j in range(1, sc.universe + 1):
        samples.append(Sample(tuple((2 * i, 2 * i + 1) for i, F in enumerate(sc.family) if j in F), 0))
    return Instance(Problem.INDEPENDENT_SET_DEG, 2 * m, tuple(samples), k=2 * min(sc.k, m), d=1)


def brute_force_independent_set(edges: Iterable[Pair], n: int, k: int) -> bool:
    E = set(canonical_edges(edges))
    return any(all(e not in E for e in combinations(X, 2)) for X in combinations(range(n), k))


def reduce_is_to_conscheck_is(edges: Sequence[Pair], n: int, k: int) -> Instance:
    """One positive single-edge sample per edge; an edgeless graph gives one empty positive sample."""
    E = canonical_edges(edges)
    samples = [Sample((e,), 1) for e in E] or [Sample((), 1)]
    return Instance(Problem.INDEPENDENT_SET_DEG, n, tuple(samples), k=k, d=1)
