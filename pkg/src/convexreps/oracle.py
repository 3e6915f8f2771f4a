"""Checks of the floor(n/2) bound on r_{A-A}(d) for convex sets.

Two routes: :func:`witnesses` lists every representation ``d = a_{j+k} - a_j``
of one difference and checks the ordering convexity forces on the indices;
:func:`enumerate_convex` runs a visitor over every integer convex set with
bounded gaps.
"""

from __future__ import annotations

import bisect
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import accumulate, combinations
from typing import Callable, Iterator, Sequence

from .convex import ConvexSet
from .errors import BoundViolation, WitnessStructureError
from .numeric import RationalLike, as_rational, format_rational
from .stats import max_rep_diff

GapSequence = tuple[int, ...]
Visitor = Callable[[GapSequence], int]


@dataclass(frozen=True, order=True)
class RepWitness:
    j: int  # 1-based start index
    k: int  # d = a_{j+k} - a_j

    def as_pair(self) -> list[int]:
        return [self.j, self.k]


def _scan_witnesses(xs: Sequence, d) -> list[RepWitness]:
    out = []
    for j0, x in enumerate(xs):
        target = x + d
        i = bisect.bisect_left(xs, target, lo=j0 + 1)
        if i < len(xs) and xs[i] == target:
            out.append(RepWitness(j0 + 1, i - j0))
    out.sort(key=lambda w: -w.k)
    return out


def check_witness_structure(ws: Sequence[RepWitness], n: int) -> None:
    """Raise :class:`WitnessStructureError` unless the witness list is ordered as convexity forces.

    ``ws`` is sorted by decreasing k.  Required: k strictly decreasing (so all
    k distinct), ``j_{i+1} >= j_i + 2``, and for t witnesses ``2t - 1 <= j_t <= n - 1``.
    """
    for w in ws:
        if not (1 <= w.j and w.k >= 1 and w.j + w.k <= n):
            raise WitnessStructureError(f"witness {w} out of range for n = {n}")
    if len({w.k for w in ws}) != len(ws):
        raise WitnessStructureError(f"repeated k among witnesses {ws}")
    for prev, cur in zip(ws, ws[1:]):
        if not cur.k < prev.k:
            raise WitnessStructureError(f"k not strictly decreasing at {prev}, {cur}")
        if cur.j < prev.j + 2:
            raise WitnessStructureError(f"j step below 2 at {prev}, {cur}")
    if ws:
        t = len(ws)
        j_t = ws[-1].j
        if j_t < 2 * t - 1 or j_t > n - 1:
            raise WitnessStructureError(f"j_t = {j_t} outside [{2 * t - 1}, {n - 1}] for t = {t}")


def witnesses(A: ConvexSet, d: RationalLike) -> list[RepWitness]:
    """All ``(j, k)`` with ``a_{j+k} - a_j = d``, sorted by decreasing k, structure-checked.

    A negative d is answered with the witnesses of -d (pairs swap order).
    """
    d = as_rational(d)
    if d == 0:
        raise ValueError("witnesses need a nonzero difference")
    ws = _scan_witnesses(A.elements, abs(d))
    check_witness_structure(ws, len(A))
    return ws


@dataclass(frozen=True)
class BoundCheck:
    n: int
    bound: int
    d: Fraction
    count: int
    witnesses: list[RepWitness]

    @property
    def margin(self) -> int:
        return self.bound - self.count

    def to_json(self) -> dict:
        return {
            "ok": True,
            "n": self.n,
            "bound": self.bound,
            "d": format_rational(self.d),
            "count": self.count,
            "margin": self.margin,
            "witnesses": [w.as_pair() for w in self.witnesses],
        }


def verify_bound(A: ConvexSet, d: RationalLike | None = None) -> BoundCheck:
    """Check ``max r(d) <= floor(n/2)`` and the witness structure.

    Witnesses are reported for ``d`` if given, otherwise for the maximising
    difference.  A violation raises :class:`BoundViolation`.
    """
    n = len(A)
    bound = n // 2
    if n < 2:
        if d is not None and as_rational(d) != 0:
            return BoundCheck(n, bound, as_rational(d), 0, [])
        raise ValueError("verify needs a set with at least two elements")
    best_d, best = max_rep_diff(A)
    if best > bound:
        raise BoundViolation(
            f"r({format_rational(best_d)}) = {best} > floor({n}/2) = {bound} "
            f"for elements {[format_rational(x) for x in A.elements]}"
        )
    target = best_d if d is None else as_rational(d)
    ws = witnesses(A, target)
    if d is not None:
        # structure of the maximiser is checked even when another d was asked for
        witnesses(A, best_d)
    return BoundCheck(n, bound, target, len(ws), ws)


def iter_gap_sequences(n: int, max_gap: int, first_gap: int | None = None) -> Iterator[GapSequence]:
    """Strictly increasing ``g_1 < ... < g_{n-1}`` in ``[1, max_gap]``, lexicographic."""
    k = n - 1
    if first_gap is None:
        yield from combinations(range(1, max_gap + 1), k)
        return
    if k == 0:
        return
    for rest in combinations(range(first_gap + 1, max_gap + 1), k - 1):
        yield (first_gap, *rest)


def max_count_checked(g: GapSequence) -> int:
    """Default visitor: max r(d) over d > 0 for the set with gaps ``g``.

    Every difference with at least two representations also has its witness
    list structure-checked.  Works on plain ints for speed.
    """
    xs = list(accumulate(g, initial=0))
    counts = Counter(b - a for i, a in enumerate(xs) for b in xs[i + 1 :])
    best = max(counts.values(), default=0)
    n = len(xs)
    for d, c in counts.items():
        if c >= 2:
            ws = _scan_witnesses(xs, d)
            if len(ws) != c:
                raise WitnessStructureError(f"witness scan found {len(ws)} of {c} for d = {d}, gaps {g}")
            check_witness_structure(ws, n)
    return best


@dataclass
class SearchReport:
    n: int
    max_gap: int
    sets_enumerated: int = 0
    max_count_found: int = 0
    extremal_witness: GapSequence | None = None
    violations: list[GapSequence] = field(default_factory=list)

    @property
    def bound(self) -> int:
        return self.n // 2

    @property
    def attained(self) -> bool:
        return self.max_count_found == self.bound

    def record(self, g: GapSequence, count: int) -> None:
        self.sets_enumerated += 1
        if count > self.max_count_found:
            self.max_count_found = count
            self.extremal_witness = g
        elif count == self.max_count_found and (self.extremal_witness is None or g < self.extremal_witness):
            self.extremal_witness = g
        if count > self.bound:
            self.violations.append(g)

    def merge(self, other: SearchReport) -> SearchReport:
        out = SearchReport(self.n, self.max_gap)
        out.sets_enumerated = self.sets_enumerated + other.sets_enumerated
        out.max_count_found = max(self.max_count_found, other.max_count_found)
        candidates = [
            r.extremal_witness
            for r in (self, other)
            if r.extremal_witness is not None and r.max_count_found == out.max_count_found
        ]
        out.extremal_witness = min(candidates) if candidates else None
        out.violations = sorted(self.violations + other.violations)
        return out

    def to_json(self, attain: bool = False) -> dict:
        data = {
            "n": self.n,
            "max_gap": self.max_gap,
            "sets_enumerated": self.sets_enumerated,
            "max_count_found": self.max_count_found,
            "bound": self.bound,
            "violations": [list(g) for g in self.violations],
        }
        if attain:
            data["attained"] = self.attained
            data["extremal_witness"] = list(self.extremal_witness) if self.extremal_witness else None
        return data


def _search_partition(n: int, max_gap: int, first_gap: int, visitor: Visitor) -> SearchReport:
    report = SearchReport(n, max_gap)
    for g in iter_gap_sequences(n, max_gap, first_gap):
        report.record(g, visitor(g))
    return report


def enumerate_convex(
    n: int,
    max_gap: int,
    visitor: Visitor = max_count_checked,
    workers: int = 1,
) -> SearchReport:
    """Run ``visitor`` on every translation-normalised integer convex set of size n.

    The visitor returns the maximum representation count of the set it is
    given.  Work is split by first gap; with ``workers > 1`` the parts run in
    separate processes, so the visitor must be picklable.  The merged report
    does not depend on the number of workers.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if max_gap < n - 1:
        raise ValueError(f"max_gap must be >= n - 1 = {n - 1}, got {max_gap}")
    firsts = range(1, max_gap - (n - 2) + 1)
    report = SearchReport(n, max_gap)
    if workers <= 1:
        parts = [_search_partition(n, max_gap, g1, visitor) for g1 in firsts]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_search_partition, n, max_gap, g1, visitor) for g1 in firsts]
            parts = [f.result() for f in futures]
    for part in parts:
        report = report.merge(part)
    return report
