"""Coloring families for color coding.

Two modes are supported:

``random``
    ``trials`` independent uniform colorings from a seeded generator.  A fixed
    set of ``c`` vertices is colorful with probability ``c!/c^c >= e^-c``, so
    the default ``ceil(e^c * 40)`` trials miss it with probability below
    ``e^-40``.
``exhaustive``
    Every coloring of the relevant vertices that uses all ``c`` colors, up to
    renaming of colors.  All callers are invariant under color renaming, so
    this covers every coloring.
"""

from __future__ import annotations

import math
from typing import Iterator, Optional, Sequence

import numpy as np

from .core import InvalidArgumentError

MODES = ("random", "exhaustive")
EXHAUSTIVE_MAX_VERTICES = 12


def colorful_probability(c: int) -> float:
    return math.factorial(c) / c**c if c else 1.0


def default_trials(c: int) -> int:
    return math.ceil(math.exp(c) * 40)


def is_colorful(coloring: Sequence[int], vertices: Sequence[int]) -> bool:
    colors = [coloring[v] for v in vertices]
    return len(set(colors)) == len(colors)


def random_colorings(n: int, c: int, seed: int = 0, trials: Optional[int] = None) -> Iterator[list[int]]:
    if trials is None:
        trials = default_trials(c)
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        yield rng.integers(0, max(c, 1), size=n).tolist()


def surjective_growth_strings(m: int, c: int) -> Iterator[list[int]]:
    """Restricted growth strings of length m with exactly c distinct values."""
    if c == 0:
        if m == 0:
            yield []
        return
    if m < c:
        return
    s = [0] * m

    def rec(i: int, used: int):
        # values still needed must fit in the remaining positions
        if m - i < c - used:
            return
        if i == m:
            if used == c:
                yield list(s)
            return
        for val in range(min(used + 1, c)):
            s[i] = val
            yield from rec(i + 1, used + (val == used))

    s[0] = 0
    yield from rec(1, 1)


def exhaustive_colorings(n: int, c: int, vertices: Optional[Sequence[int]] = None) -> Iterator[list[int]]:
    vertices = list(range(n)) if vertices is None else sorted(vertices)
    if len(vertices) > EXHAUSTIVE_MAX_VERTICES:
        raise InvalidArgumentError(
            f"exhaustive mode is limited to {EXHAUSTIVE_MAX_VERTICES} relevant vertices, got {len(vertices)}"
        )
    if c == 0:
        yield [0] * n
        return
    for rgs in surjective_growth_strings(len(vertices), c):
        col = [0] * n
        for v, x in zip(vertices, rgs):
            col[v] = x
        yield col


def coloring_family(
    mode: str,
    n: int,
    c: int,
    seed: int = 0,
    trials: Optional[int] = None,
    vertices: Optional[Sequence[int]] = None,
) -> Iterator[list[int]]:
    if mode == "random":
        return random_colorings(n, c, seed, trials)
    if mode == "exhaustive":
        return exhaustive_colorings(n, c, vertices)
    raise InvalidArgumentError(f"unknown coloring mode {mode!r}; expected one of {MODES}")
