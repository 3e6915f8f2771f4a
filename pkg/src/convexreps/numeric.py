"""Exact rational scalars.

All set elements, gaps and deltas are :class:`fractions.Fraction` values.
``Fraction`` already keeps numerator and denominator reduced with a positive
denominator, so equality is structural and values hash consistently; this
module only adds the strict text grammar used in every JSON file and a few
helpers that have no counterpart on ``Fraction`` itself.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import lcm
from typing import Iterable, Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"-?\d+(?:/\d+)?")


class RationalFormatError(ValueError):
    """A rational string is malformed or not in canonical form."""


def format_rational(value: Fraction | int) -> str:
    """Render ``value`` as ``"p/q"``, or ``"p"`` when it is an integer."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse the canonical textual form.

    Only ``"p"`` and ``"p/q"`` with ``q > 1`` and ``gcd(p, q) = 1`` are
    accepted.  Anything else (``"2/4"``, ``"3/1"``, ``"+1"``, ``"-0"``,
    ``"007"``, ``"0.5"``) raises :class:`RationalFormatError`.
    """
    if not isinstance(text, str) or not _RATIONAL_RE.fullmatch(text):
        raise RationalFormatError(f"not a rational literal: {text!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise RationalFormatError(f"zero denominator: {text!r}")
    value = Fraction(int(num), int(den) if den else 1)
    canonical = format_rational(value)
    if canonical != text:
        raise RationalFormatError(
            f"non-canonical rational {text!r}; write it as {canonical!r}"
        )
    return value


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and canonical strings.  Floats are refused."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def compare(a: Fraction, b: Fraction) -> int:
    """Three-way comparison: -1 if a < b, 0 if equal, 1 if a > b."""
    return (a > b) - (a < b)


def lcm_of_denominators(values: Iterable[Fraction | int]) -> int:
    """Smallest positive L with ``L * v`` integral for every ``v``."""
    dens = [Fraction(v).denominator for v in values]
    if not dens:
        raise ValueError("lcm_of_denominators needs at least one value")
    return lcm(*dens)
