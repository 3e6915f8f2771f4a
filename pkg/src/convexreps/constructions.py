"""Extremal convex sets: size 2m with a difference represented m times, and glued copies."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .convex import ConvexityError, ConvexSet, gaps, validate_convex
from .errors import InvariantViolation
from .numeric import RationalLike, as_rational, format_rational


@dataclass(frozen=True)
class ConstructionResult:
    set: ConvexSet
    d: Fraction
    delta: Fraction
    m: int


@dataclass(frozen=True)
class GluedResult:
    set: ConvexSet
    t: int
    copies: int
    rich_differences: tuple[Fraction, ...]
    scales: tuple[int, ...]
    offsets: tuple[Fraction, ...]
    delta: Fraction


def _check_positive_int(name: str, value) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name} must be an integer, got {value!r}")
    if value < 1:
        raise ValueError(f"{name} must be >= 1, got {value}")
    return value


def default_delta(m: int) -> Fraction:
    """1 for m <= 2 (no upper constraint), else 1/(2(m-1)), which is < 1/(m-2)."""
    _check_positive_int("m", m)
    if m <= 2:
        return Fraction(1)
    return Fraction(1, 2 * (m - 1))


def delta_upper_bound(m: int) -> Fraction | None:
    """Exclusive upper bound 1/(m-2) on delta; None when m <= 2."""
    return Fraction(1, m - 2) if m >= 3 else None


def construction_elements(m: int, delta: Fraction) -> list[Fraction]:
    """Raw elements a_1..a_{2m} without any admissibility check or validation."""
    first = [(k - 1) + delta * (k - 2) * (k - 1) / 2 for k in range(1, m + 2)]
    d = first[m]
    a = list(first)
    for i in range(1, m):
        # a_{m+1+i} = a_{1+2i} + d, 1-based; 1+2i <= m+i so it already exists
        a.append(a[2 * i] + d)
    return a


def construct(m: int, delta: RationalLike | None = None) -> ConstructionResult:
    """Convex set of size 2m in which ``d = a_{m+1}`` has exactly m representations.

    The first m+1 elements have gaps 1, 1+delta, 1+2*delta, ...; the rest are
    ``a_{m+1+i} = a_{1+2i} + d`` so that ``d = a_{m+1} - a_1 = a_{m+2} - a_3
    = ... = a_{2m} - a_{2m-1}``.  For m >= 3 the set is convex only when
    ``0 < delta < 1/(m-2)``.
    """
    _check_positive_int("m", m)
    delta = default_delta(m) if delta is None else as_rational(delta)
    if delta <= 0:
        raise ValueError(f"delta must be positive, got {format_rational(delta)}")
    bound = delta_upper_bound(m)
    if bound is not None and delta >= bound:
        raise ValueError(
            f"delta = {format_rational(delta)} is not below the bound "
            f"1/(m-2) = {format_rational(bound)} required for m = {m}"
        )
    elements = construction_elements(m, delta)
    try:
        A = validate_convex(elements)
    except ConvexityError as exc:
        raise InvariantViolation(f"construction with admissible delta is not convex: {exc}") from exc
    return ConstructionResult(set=A, d=elements[m], delta=delta, m=m)


def glue(t: int, copies: int, delta: RationalLike | None = None) -> GluedResult:
    """Concatenate ``copies`` affine images of ``construct(t)`` into one convex set.

    Copy j+1 is scaled by the smallest integer mu whose smallest internal gap
    exceeds the last gap of copy j by more than one, then translated so the
    gap bridging the copies is the midpoint of those two gaps.  Scales strictly
    increase, so the rich differences ``mu_j * d`` are pairwise distinct.
    """
    _check_positive_int("t", t)
    _check_positive_int("copies", copies)
    base = construct(t, delta)
    base_gaps = gaps(base.set)
    g_first, g_last = base_gaps[0], base_gaps[-1]

    elements: list[Fraction] = list(base.set.elements)
    scales = [1]
    offsets = [Fraction(0)]
    for _ in range(1, copies):
        prev_last_gap = scales[-1] * g_last
        mu = int((prev_last_gap + 1) // g_first) + 1
        # already > previous scale; kept explicit since distinct scales carry the count
        mu = max(mu, scales[-1] + 1)
        bridge = (prev_last_gap + mu * g_first) / 2
        offset = elements[-1] + bridge - mu * base.set.elements[0]
        elements.extend(mu * x + offset for x in base.set.elements)
        scales.append(mu)
        offsets.append(offset)

    try:
        A = validate_convex(elements)
    except ConvexityError as exc:
        raise InvariantViolation(f"glued set is not convex: {exc}") from exc
    return GluedResult(
        set=A,
        t=t,
        copies=copies,
        rich_differences=tuple(mu * base.d for mu in scales),
        scales=tuple(scales),
        offsets=tuple(offsets),
        delta=base.delta,
    )
