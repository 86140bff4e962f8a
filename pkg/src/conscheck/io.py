"""Line-oriented text formats for instances, verdicts and PAC scenarios.

Instance grammar (UTF-8, LF line endings, single spaces between tokens)::

    CONSCHECK 1
    PROBLEM <name>
    N <n>
    K <k>            only for problems with a size parameter
    D <d>            only for the *-deg problems
    T <t>
    S <label> <m>    t times, each followed by m lines "<u> <v>" with u < v

Scenario files use the header ``CONSCHECK-SCENARIO 1``, carry a ``CONCEPT``
line (the hidden solution, written like a verdict without ``SOLUTION``) right
before ``T``, and put a ``PROB <p>`` line after every ``S`` line.  The label
on each ``S`` line must agree with the concept.

Malformed input is rejected with :class:`ParseError`, never repaired.
"""

from __future__ import annotations

import re

from .core import (
    ConsCheckError,
    Cover,
    Instance,
    InvalidArgumentError,
    InvalidInstanceError,
    Problem,
    PSet,
    Sample,
    Solution,
    Verdict,
    VSet,
    verify,
)
from .pacsim import HiddenConcept, SampleDistribution, Scenario

_INT = re.compile(r"0|[1-9][0-9]*")
_FLOAT = re.compile(r"(0|[1-9][0-9]*)(\.[0-9]+)?([eE][-+]?[0-9]+)?")


class ParseError(ConsCheckError, ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class _Lines:
    def __init__(self, text: str):
        if "\r" in text:
            idx = text.index("\r")
            raise ParseError("carriage return in input", text.count("\n", 0, idx) + 1)
        if text and not text.endswith("\n"):
            raise ParseError("missing final line feed", text.count("\n") + 1)
        self.lines = text.split("\n")[:-1] if text else []
        self.pos = 0

    @property
    def lineno(self) -> int:
        return self.pos + 1

    def done(self) -> bool:
        return self.pos >= len(self.lines)

    def peek(self) -> str | None:
        return None if self.done() else self.lines[self.pos]

    def next_tokens(self, what: str) -> list[str]:
        if self.done():
            raise ParseError(f"unexpected end of input, expected {what}", self.lineno)
        line = self.lines[self.pos]
        self.pos += 1
        if line == "" or line.startswith(" ") or line.endswith(" ") or "  " in line:
            col = next((i + 1 for i, ch in enumerate(line) if ch == " " and (i == 0 or line[i - 1] == " ")), len(line) + 1)
            if line.endswith(" "):
                col = len(line)
            raise ParseError(f"malformed spacing, expected {what}", self.pos, col)
        return line.split(" ")

    def column_of(self, tokens: list[str], idx: int) -> int:
        return sum(len(t) + 1 for t in tokens[:idx]) + 1

    def int_at(self, tokens: list[str], idx: int) -> int:
        tok = tokens[idx]
        if not _INT.fullmatch(tok):
            raise ParseError(f"expected a nonnegative integer, got {tok!r}", self.pos, self.column_of(tokens, idx))
        return int(tok)

    def keyword(self, word: str, nargs: int) -> list[str]:
        toks = self.next_tokens(word)
        if toks[0] != word:
            raise ParseError(f"expected {word!r}, got {toks[0]!r}", self.pos)
        if len(toks) != nargs + 1:
            raise ParseError(f"{word} takes {nargs} argument(s)", self.pos)
        return toks


def _parse_header(lines: _Lines, magic: str):
    toks = lines.keyword(magic, 1)
    if toks[1] != "1":
        raise ParseError(f"unsupported format version {toks[1]!r}", lines.pos, len(magic) + 2)
    toks = lines.keyword("PROBLEM", 1)
    try:
        problem = Problem(toks[1])
    except ValueError:
        raise ParseError(f"unknown problem {toks[1]!r}", lines.pos, 9) from None
    toks = lines.keyword("N", 1)
    n = lines.int_at(toks, 1)
    if n < 1:
        raise ParseError("N must be at least 1", lines.pos, 3)
    k = d = None
    if problem.has_k:
        k = lines.int_at(lines.keyword("K", 1), 1)
    if problem.has_d:
        d = lines.int_at(lines.keyword("D", 1), 1)
    return problem, n, k, d


def _parse_edges(lines: _Lines, n: int, m: int, d):
    edges = []
    seen = set()
    deg = [0] * n
    for _ in range(m):
        toks = lines.next_tokens("an edge line")
        if len(toks) != 2:
            raise ParseError("edge line needs exactly two vertices", lines.pos)
        u, v = lines.int_at(toks, 0), lines.int_at(toks, 1)
        if u == v:
            raise ParseError(f"self-loop at line {lines.pos}", lines.pos)
        if u > v:
            raise ParseError(f"edge {u} {v} not in increasing order (u >= v)", lines.pos)
        if v >= n:
            raise ParseError(f"vertex {v} out of range for N={n}", lines.pos, lines.column_of(toks, 1))
        if (u, v) in seen:
            raise ParseError(f"duplicate edge {u} {v}", lines.pos)
        seen.add((u, v))
        deg[u] += 1
        deg[v] += 1
        if d is not None and max(deg[u], deg[v]) > d:
            raise ParseError(f"degree bound D={d} violated", lines.pos)
        edges.append((u, v))
    return tuple(edges)


def _parse_label(lines: _Lines, toks: list[str]) -> int:
    if toks[1] not in ("0", "1"):
        raise ParseError(f"label must be 0 or 1, got {toks[1]!r}", lines.pos, 3)
    return int(toks[1])


def parse_instance(text: str) -> Instance:
    lines = _Lines(text)
    problem, n, k, d = _parse_header(lines, "CONSCHECK")
    t = lines.int_at(lines.keyword("T", 1), 1)
    samples = []
    for _ in range(t):
        toks = lines.keyword("S", 2)
        label = _parse_label(lines, toks)
        m = lines.int_at(toks, 2)
        samples.append(Sample(_parse_edges(lines, n, m, d), label))
    if not lines.done():
        raise ParseError("trailing content after last sample", lines.lineno)
    try:
        return Instance(problem, n, tuple(samples), k=k, d=d)
    except InvalidInstanceError as exc:
        raise ParseError(str(exc), lines.lineno) from exc


def _header_lines(problem: Problem, n: int, k, d, magic: str) -> list[str]:
    out = [f"{magic} 1", f"PROBLEM {problem.value}", f"N {n}"]
    if k is not None:
        out.append(f"K {k}")
    if d is not None:
        out.append(f"D {d}")
    return out


def serialize_instance(instance: Instance) -> str:
    out = _header_lines(instance.problem, instance.n, instance.k, instance.d, "CONSCHECK")
    out.append(f"T {instance.t}")
    for s in instance.samples:
        out.append(f"S {s.label} {len(s.edges)}")
        out.extend(f"{u} {v}" for u, v in s.edges)
    return "\n".join(out) + "\n"


def _solution_lines(solution: Solution) -> list[str]:
    if isinstance(solution, VSet):
        return [" ".join(["VSET", *map(str, solution.vertices)])]
    if isinstance(solution, PSet):
        return [" ".join(["PSET", *(f"{u}-{v}" for u, v in solution.pairs)])]
    lines = [f"COVER {len(solution.members)}"]
    lines += [" ".join(["C", *map(str, m)]) for m in solution.members]
    return lines


def serialize_verdict(verdict: Verdict) -> str:
    if verdict is None:
        return "NO-SOLUTION\n"
    lines = _solution_lines(verdict)
    lines[0] = "SOLUTION " + lines[0]
    return "\n".join(lines) + "\n"


def exit_code(verdict: Verdict) -> int:
    return 1 if verdict is None else 0


def _parse_solution(lines: _Lines, toks: list[str]) -> Solution:
    kind, args = toks[0], toks[1:]
    try:
        if kind == "VSET":
            return VSet(tuple(lines.int_at(toks, i) for i in range(1, len(toks))))
        if kind == "PSET":
            pairs = []
            for i, a in enumerate(args, 1):
                u, sep, v = a.partition("-")
                if not sep or not _INT.fullmatch(u) or not _INT.fullmatch(v) or int(u) >= int(v):
                    raise ParseError(f"bad pair {a!r}", lines.pos, lines.column_of(toks, i))
                pairs.append((int(u), int(v)))
            if len(set(pairs)) != len(pairs):
                raise ParseError("duplicate pair", lines.pos)
            return PSet(tuple(pairs))
        if kind == "COVER":
            if len(toks) != 2:
                raise ParseError("COVER takes one argument", lines.pos)
            members = []
            for _ in range(lines.int_at(toks, 1)):
                ctoks = lines.next_tokens("a cover member line")
                if ctoks[0] != "C":
                    raise ParseError("expected a 'C' line", lines.pos)
                members.append(tuple(lines.int_at(ctoks, i) for i in range(1, len(ctoks))))
            return Cover(tuple(members))
    except InvalidArgumentError as exc:
        raise ParseError(str(exc), lines.pos) from exc
    raise ParseError(f"unknown solution kind {kind!r}", lines.pos)


def parse_verdict(text: str) -> Verdict:
    lines = _Lines(text)
    toks = lines.next_tokens("a verdict")
    if toks == ["NO-SOLUTION"]:
        result = None
    elif toks[0] == "SOLUTION" and len(toks) >= 2:
        result = _parse_solution(lines, toks[1:])
    else:
        raise ParseError("expected SOLUTION or NO-SOLUTION", lines.pos)
    if not lines.done():
        raise ParseError("trailing content after verdict", lines.lineno)
    return result


# --- scenarios ---


def parse_scenario(text: str) -> Scenario:
    lines = _Lines(text)
    problem, n, k, d = _parse_header(lines, "CONSCHECK-SCENARIO")
    toks = lines.next_tokens("CONCEPT")
    if toks[0] != "CONCEPT" or len(toks) < 2:
        raise ParseError("expected CONCEPT line", lines.pos)
    concept_line = lines.pos
    solution = _parse_solution(lines, toks[1:])
    try:
        concept = HiddenConcept(problem, solution, n, k, d)
    except InvalidArgumentError as exc:
        raise ParseError(str(exc), concept_line) from exc
    t = lines.int_at(lines.keyword("T", 1), 1)
    support, probs = [], []
    for _ in range(t):
        toks = lines.keyword("S", 2)
        label = _parse_label(lines, toks)
        s_line = lines.pos
        m = lines.int_at(toks, 2)
        ptoks = lines.keyword("PROB", 1)
        if not _FLOAT.fullmatch(ptoks[1]):
            raise ParseError(f"bad probability {ptoks[1]!r}", lines.pos, 6)
        p = float(ptoks[1])
        edges = _parse_edges(lines, n, m, d)
        if verify(problem, solution, frozenset(edges), n, k, d) != bool(label):
            raise ParseError("sample label disagrees with the concept", s_line)
        support.append(edges)
        probs.append(p)
    if not lines.done():
        raise ParseError("trailing content after last sample", lines.lineno)
    try:
        dist = SampleDistribution(tuple(support), tuple(probs))
    except InvalidArgumentError as exc:
        raise ParseError(str(exc), lines.lineno) from exc
    return Scenario(concept, dist)


def serialize_scenario(scenario: Scenario) -> str:
    c, dist = scenario.concept, scenario.distribution
    out = _header_lines(c.problem, c.n, c.k, c.d, "CONSCHECK-SCENARIO")
    concept = _solution_lines(c.solution)
    out.append("CONCEPT " + concept[0])
    out.extend(concept[1:])
    out.append(f"T {len(dist.support)}")
    for edges, p in zip(dist.support, dist.probs):
        out.append(f"S {int(c.label(edges))} {len(edges)}")
        out.append(f"PROB {p!r}")
        out.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(out) + "\n"


BUNDLED_SCENARIOS = ("split-graph", "matching", "dominating-set-deg")


def load_bundled_scenario(name: str) -> Scenario:
    """Scenario shipped with the package, by problem name."""
    from importlib.resources import files

    if name not in BUNDLED_SCENARIOS:
        raise InvalidArgumentError(f"unknown bundled scenario {name!r}; choose from {BUNDLED_SCENARIOS}")
    return parse_scenario(files("conscheck").joinpath("data", f"{name}.scenario").read_text(encoding="utf-8"))
