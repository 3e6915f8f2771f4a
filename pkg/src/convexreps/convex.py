"""Convex sets of rationals and their gap sequences.

A finite set ``a_1 < ... < a_n`` is convex when its consecutive gaps strictly
increase.  Indices in every error, margin and witness are 1-based.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate
from pathlib import Path
from typing import Iterable, Sequence

from .numeric import (
    RationalLike,
    as_rational,
    format_rational,
    lcm_of_denominators,
    parse_rational,
)


class ConvexityError(ValueError):
    """Input elements do not form a convex set."""


class EmptySetError(ConvexityError):
    def __init__(self) -> None:
        super().__init__("Empty: a convex set needs at least one element")


class NotSortedError(ConvexityError):
    def __init__(self, index: int) -> None:
        self.index = index
        super().__init__(f"NotSorted({index}): a_{index} >= a_{index + 1}")


class NotConvexError(ConvexityError):
    def __init__(self, index: int) -> None:
        self.index = index
        super().__init__(
            f"NotConvex({index}): a_{index} - a_{index - 1} >= a_{index + 1} - a_{index}"
        )


@dataclass(frozen=True)
class ConvexSet:
    """Validated, immutable convex set.  Build it with :func:`validate_convex`."""

    elements: tuple[Fraction, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def a(self, i: int) -> Fraction:
        """Element ``a_i`` with the 1-based index used throughout reports."""
        if not 1 <= i <= len(self.elements):
            raise IndexError(f"a_{i} out of range for a set of size {len(self.elements)}")
        return self.elements[i - 1]

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.elements)

    def to_json(self) -> dict:
        return {"elements": [format_rational(x) for x in self.elements]}


def validate_convex(elements: Iterable[RationalLike]) -> ConvexSet:
    """Check strict increase and strict gap increase; return the ConvexSet.

    Raises the error for the first violating index: ``NotSortedError(i)`` when
    ``a_i >= a_{i+1}``, ``NotConvexError(i)`` when the gaps either side of
    ``a_i`` fail to increase.  Sortedness is checked over the whole list first.
    """
    xs = tuple(as_rational(x) for x in elements)
    if not xs:
        raise EmptySetError()
    for i in range(len(xs) - 1):
        if xs[i] >= xs[i + 1]:
            raise NotSortedError(i + 1)
    for i in range(1, len(xs) - 1):
        if xs[i] - xs[i - 1] >= xs[i + 1] - xs[i]:
            raise NotConvexError(i + 1)
    return ConvexSet(xs)


def gaps(A: ConvexSet) -> list[Fraction]:
    if len(A) < 2:
        raise ValueError("gaps need a set with at least two elements")
    xs = A.elements
    return [xs[i + 1] - xs[i] for i in range(len(xs) - 1)]


def convexity_margin(A: ConvexSet, i: int) -> Fraction:
    """``(a_{i+1} - a_i) - (a_i - a_{i-1})`` for ``2 <= i <= n-1``; positive on convex sets."""
    if not 2 <= i <= len(A) - 1:
        raise IndexError(f"no convexity condition at index {i} for n = {len(A)}")
    return (A.a(i + 1) - A.a(i)) - (A.a(i) - A.a(i - 1))


def translate(A: ConvexSet, c: RationalLike) -> ConvexSet:
    c = as_rational(c)
    return ConvexSet(tuple(x + c for x in A.elements))


def scale(A: ConvexSet, factor: RationalLike) -> ConvexSet:
    factor = as_rational(factor)
    if factor <= 0:
        raise ValueError(f"scale factor must be positive, got {format_rational(factor)}")
    return ConvexSet(tuple(x * factor for x in A.elements))


def dilate_to_integers(A: ConvexSet) -> tuple[ConvexSet, int]:
    """Multiply by the lcm of the denominators; returns ``(L*A, L)``."""
    L = lcm_of_denominators(A.elements)
    if L == 1:
        return A, 1
    return scale(A, L), L


def validate_gap_sequence(g: Sequence[int]) -> tuple[int, ...]:
    """A gap sequence is a (possibly empty) strictly increasing tuple of positive ints."""
    g = tuple(g)
    for x in g:
        if isinstance(x, bool) or not isinstance(x, int):
            raise TypeError(f"gap sequences hold integers, got {x!r}")
    if g and g[0] < 1:
        raise ValueError("gaps must be positive")
    for i in range(len(g) - 1):
        if g[i] >= g[i + 1]:
            raise ValueError(f"gaps must strictly increase (g_{i + 1} >= g_{i + 2})")
    return g


def from_gap_sequence(g: Sequence[int]) -> ConvexSet:
    g = validate_gap_sequence(g)
    return ConvexSet(tuple(Fraction(x) for x in accumulate(g, initial=0)))


def load_set(path: str | Path) -> ConvexSet:
    """Read a set file ``{"elements": ["p/q", ...]}`` and validate it."""
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    return set_from_json(data)


def set_from_json(data) -> ConvexSet:
    if not isinstance(data, dict) or "elements" not in data:
        raise ValueError('set file must be a JSON object with an "elements" array')
    raw = data["elements"]
    if not isinstance(raw, list):
        raise ValueError('"elements" must be an array of rational strings')
    return validate_convex(parse_rational(s) for s in raw)


def dump_set(A: ConvexSet, path: str | Path) -> None:
    Path(path).write_text(json.dumps(A.to_json()) + "\n", encoding="utf-8")
