"""Scaling tables over the construction family.

Raw quantities (energy, max sum representation, rich counts) are exact
integers and are what ``recheck`` verifies.  The ratio columns divide them by
a power of n and are printed to 6 significant digits for reading only.
"""

from __future__ import annotations

import csv
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from decimal import Context, Decimal
from fractions import Fraction
from pathlib import Path

from .constructions import construct, default_delta
from .convex import ConvexSet, dilate_to_integers, dump_set, load_set
from .numeric import format_rational, parse_rational
from .stats import diff_stats, max_rep_sum

CSV_HEADER = ["m", "n", "energy", "energy_ratio", "max_sum_rep", "sum_ratio", "rich_t", "rich_count"]

ENERGY_EXPONENT = Fraction(5, 2)
SUM_EXPONENT = Fraction(2, 3)

_WORK = Context(prec=40)
_SHOW = Context(prec=6)


def ratio_string(value: int | Fraction, n: int, exponent: Fraction) -> str:
    """``value / n**exponent`` as a plain decimal string with 6 significant digits."""
    value = Fraction(value)
    num = _WORK.divide(Decimal(value.numerator), Decimal(value.denominator))
    root = _WORK.power(Decimal(n), _WORK.divide(Decimal(exponent.numerator), Decimal(exponent.denominator)))
    return format(_SHOW.divide(num, root), "f")


def thresholds(m: int) -> list[int]:
    """Even t up to m, plus t = m itself."""
    return sorted(set(range(2, m + 1, 2)) | {m})


@dataclass(frozen=True)
class ScalingRow:
    m: int
    n: int
    energy: int
    energy_ratio: str
    max_sum_rep: int
    max_sum_at: Fraction
    sum_ratio: str
    rich_counts: tuple[tuple[int, int], ...]  # (t, count)
    set: ConvexSet
    scale: int
    d: Fraction
    delta: Fraction

    def rich_ratio(self, t: int, count: int) -> str:
        # count * t^3 / n^3; no bound is asserted on this
        return ratio_string(Fraction(count * t**3), self.n, Fraction(3))


def scaling_row(m: int) -> ScalingRow:
    res = construct(m, default_delta(m))
    A, L = dilate_to_integers(res.set)
    stats = diff_stats(A)
    c_at, c_max = max_rep_sum(A)
    n = len(A)
    return ScalingRow(
        m=m,
        n=n,
        energy=stats.energy,
        energy_ratio=ratio_string(stats.energy, n, ENERGY_EXPONENT),
        max_sum_rep=c_max,
        max_sum_at=c_at,
        sum_ratio=ratio_string(c_max, n, SUM_EXPONENT),
        rich_counts=tuple((t, stats.rich_count(t)) for t in thresholds(m)),
        set=A,
        scale=L,
        d=res.d * L,
        delta=res.delta,
    )


def scaling_report(m_list: list[int], workers: int = 1) -> list[ScalingRow]:
    for m in m_list:
        if isinstance(m, bool) or not isinstance(m, int) or m < 1:
            raise ValueError(f"every m must be a positive integer, got {m!r}")
    if workers <= 1:
        return [scaling_row(m) for m in m_list]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(scaling_row, m_list))


def companion_path(csv_path: str | Path) -> Path:
    return Path(csv_path).with_suffix(".json")


def write_report(rows: list[ScalingRow], csv_path: str | Path) -> Path:
    """Write the CSV, one set file per row, and the companion JSON; return the JSON path."""
    csv_path = Path(csv_path)
    json_path = companion_path(csv_path)
    sets_dir = csv_path.parent / f"{csv_path.stem}_sets"
    sets_dir.mkdir(parents=True, exist_ok=True)

    with open(csv_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for row in rows:
            for t, count in row.rich_counts:
                writer.writerow(
                    [row.m, row.n, row.energy, row.energy_ratio, row.max_sum_rep, row.sum_ratio, t, count]
                )

    entries = []
    for row in rows:
        set_file = sets_dir / f"m{row.m}.json"
        dump_set(row.set, set_file)
        entries.append(
            {
                "m": row.m,
                "n": row.n,
                "set_file": set_file.relative_to(json_path.parent).as_posix(),
                "delta": format_rational(row.delta),
                "scale": row.scale,
                "d": format_rational(row.d),
                "energy": row.energy,
                "energy_ratio": row.energy_ratio,
                "max_sum_rep": row.max_sum_rep,
                "max_sum_at": format_rational(row.max_sum_at),
                "sum_ratio": row.sum_ratio,
                "rich_counts": [
                    {"t": t, "count": c, "ratio": row.rich_ratio(t, c)} for t, c in row.rich_counts
                ],
            }
        )
    doc = {"csv": csv_path.name, "rows": entries}
    json_path.write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")
    return json_path


def recheck(json_path: str | Path) -> list[str]:
    """Re-derive every raw integer from the set files; return a list of mismatches."""
    json_path = Path(json_path)
    doc = json.loads(json_path.read_text(encoding="utf-8"))
    problems: list[str] = []
    csv_rows: dict[tuple[int, int], dict] = {}
    csv_file = json_path.parent / doc["csv"]
    with open(csv_file, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != CSV_HEADER:
            problems.append(f"CSV header {reader.fieldnames} != {CSV_HEADER}")
        for r in reader:
            csv_rows[(int(r["m"]), int(r["rich_t"]))] = r

    seen = set()
    for entry in doc["rows"]:
        m = entry["m"]
        A = load_set(json_path.parent / entry["set_file"])
        stats = diff_stats(A)
        _, c_max = max_rep_sum(A)
        n = len(A)

        def check(name, claimed, actual):
            if claimed != actual:
                problems.append(f"m={m}: {name} claimed {claimed}, recomputed {actual}")

        check("n", entry["n"], n)
        check("n = 2m", 2 * m, n)
        check("energy", entry["energy"], stats.energy)
        check("max_sum_rep", entry["max_sum_rep"], c_max)
        check("d multiplicity", stats.rep_counts.get(parse_rational(entry["d"]), 0), m)
        for rc in entry["rich_counts"]:
            t = rc["t"]
            check(f"rich_count(t={t})", rc["count"], stats.rich_count(t))
            seen.add((m, t))
            r = csv_rows.get((m, t))
            if r is None:
                problems.append(f"m={m}, t={t}: missing from CSV")
                continue
            check(f"csv energy (t={t})", int(r["energy"]), stats.energy)
            check(f"csv max_sum_rep (t={t})", int(r["max_sum_rep"]), c_max)
            check(f"csv rich_count (t={t})", int(r["rich_count"]), stats.rich_count(t))
            check(f"csv n (t={t})", int(r["n"]), n)
        check("rich_count at t = m", stats.rich_count(m), 1)
    extra = set(csv_rows) - seen
    if extra:
        problems.append(f"CSV rows without companion entries: {sorted(extra)}")
    return problems
