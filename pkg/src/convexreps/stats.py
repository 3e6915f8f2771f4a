"""Representation functions, additive energy and rich-difference counts.

``r(x)`` always counts ordered pairs ``(a, b)`` with ``a - b = x`` (or
``a + b = x`` for sums).  Histograms are keyed by positive differences only;
``r(0) = n`` and ``r(-x) = r(x)`` recover the rest.
"""

from __future__ import annotations

import heapq
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import groupby

from .convex import ConvexSet
from .numeric import RationalLike, as_rational


@dataclass(frozen=True)
class DiffStats:
    n: int
    rep_counts: dict[Fraction, int]  # positive d -> r(d), increasing d
    diff_set_size: int
    energy: int

    def rich_count(self, t: int) -> int:
        if t < 1:
            raise ValueError("rich threshold must be >= 1")
        return sum(1 for c in self.rep_counts.values() if c >= t)

    def max_rep(self) -> tuple[Fraction, int]:
        if not self.rep_counts:
            raise ValueError("max_rep_diff needs a set with at least two elements")
        # dict is ordered by increasing d, so the first maximum is the smallest d
        best_d, best = None, 0
        for d, c in self.rep_counts.items():
            if c > best:
                best_d, best = d, c
        return best_d, best


def rep_diff(A: ConvexSet, x: RationalLike) -> int:
    x = as_rational(x)
    members = set(A.elements)
    return sum(1 for b in A.elements if b + x in members)


def rep_sum(A: ConvexSet, C: RationalLike) -> int:
    C = as_rational(C)
    members = set(A.elements)
    return sum(1 for a in A.elements if C - a in members)


def _shifted_differences(xs, k):
    return (xs[j + k] - xs[j] for j in range(len(xs) - k))


def diff_stats(A: ConvexSet) -> DiffStats:
    """Histogram of positive differences by merging the shifted sequences.

    For a convex set every sequence ``j -> a_{j+k} - a_j`` is strictly
    increasing, so a k-way merge yields all positive differences in sorted
    order and equal values arrive adjacent.
    """
    xs = A.elements
    n = len(xs)
    merged = heapq.merge(*(_shifted_differences(xs, k) for k in range(1, n)))
    counts = {d: sum(1 for _ in run) for d, run in groupby(merged)}
    energy = n * n + 2 * sum(c * c for c in counts.values())
    return DiffStats(n=n, rep_counts=counts, diff_set_size=2 * len(counts) + 1, energy=energy)


def rich_count(A: ConvexSet, t: int) -> int:
    """Number of positive d with r(d) >= t; double it for the sign-agnostic count."""
    return diff_stats(A).rich_count(t)


def max_rep_diff(A: ConvexSet) -> tuple[Fraction, int]:
    """Positive difference with the most representations, smallest d on ties."""
    if len(A) < 2:
        raise ValueError("max_rep_diff needs a set with at least two elements")
    return diff_stats(A).max_rep()


def sum_histogram(A: ConvexSet) -> dict[Fraction, int]:
    xs = A.elements
    hist: Counter[Fraction] = Counter()
    for i, a in enumerate(xs):
        hist[a + a] += 1
        for b in xs[i + 1 :]:
            hist[a + b] += 2
    return dict(sorted(hist.items()))


def max_rep_sum(A: ConvexSet) -> tuple[Fraction, int]:
    """Sum ``C`` maximising ``r_{A+A}(C)``, smallest C on ties."""
    best_c, best = None, 0
    for c, cnt in sum_histogram(A).items():
        if cnt > best:
            best_c, best = c, cnt
    return best_c, best
