"""Command-line entry point.

Exit codes: 0 success, 1 bad input or domain error, 2 a proved bound or
structural fact appeared violated (always a bug).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .constructions import construct, glue
from .convex import ConvexityError, dilate_to_integers, load_set
from .errors import InvariantViolation
from .numeric import format_rational, parse_rational
from .oracle import enumerate_convex, verify_bound
from .reports import companion_path, ratio_string, recheck, scaling_report, write_report
from .stats import diff_stats, max_rep_sum


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for invariant violations
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _emit(data, output: str | None) -> None:
    text = json.dumps(data, indent=2) + "\n"
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _meta_path(set_path: Path) -> Path:
    return set_path.with_name(set_path.stem + ".meta.json")


def _write_set_and_meta(elements_json: dict, meta: dict, output: str | None) -> None:
    if output is None:
        _emit({**elements_json, "meta": meta}, None)
        return
    path = Path(output)
    path.write_text(json.dumps(elements_json) + "\n", encoding="utf-8")
    _meta_path(path).write_text(json.dumps(meta, indent=2) + "\n", encoding="utf-8")
    _emit(meta, None)


def cmd_construct(args) -> int:
    res = construct(args.m, args.delta)
    A, d = res.set, res.d
    meta = {"m": res.m, "delta": format_rational(res.delta)}
    if args.integer:
        A, L = dilate_to_integers(A)
        d = d * L
        meta["scale"] = L
    meta["d"] = format_rational(d)
    _write_set_and_meta(A.to_json(), meta, args.output)
    return 0


def cmd_glue(args) -> int:
    res = glue(args.t, args.copies, args.delta)
    A, rich = res.set, res.rich_differences
    meta = {
        "t": res.t,
        "copies": res.copies,
        "delta": format_rational(res.delta),
        "copy_scales": list(res.scales),
    }
    if args.integer:
        A, L = dilate_to_integers(A)
        rich = tuple(x * L for x in rich)
        meta["scale"] = L
    meta["rich_differences"] = [format_rational(x) for x in rich]
    _write_set_and_meta(A.to_json(), meta, args.output)
    return 0


def cmd_analyze(args) -> int:
    A = load_set(args.file)
    stats = diff_stats(A)
    everything = not (args.energy or args.max_rep or args.sum_rep or args.hist)
    out: dict = {"n": stats.n, "diff_set_size": stats.diff_set_size}
    if args.energy or everything:
        out["energy"] = str(stats.energy)
    if (args.max_rep or everything) and stats.n >= 2:
        d, c = stats.max_rep()
        out["max_rep"] = {"d": format_rational(d), "count": c, "bound": stats.n // 2}
    if args.sum_rep or everything:
        C, c = max_rep_sum(A)
        out["sum_rep"] = {"C": format_rational(C), "count": c}
    if args.hist:
        out["rich_counts"] = [
            {
                "t": t,
                "count": stats.rich_count(t),
                "ratio": ratio_string(Fraction(stats.rich_count(t) * t**3), stats.n, Fraction(3)),
            }
            for t in args.hist
        ]
    if args.csv:
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["difference", "count"])
            for d, c in stats.rep_counts.items():
                w.writerow([format_rational(d), c])
    _emit(out, args.output)
    return 0


def cmd_verify(args) -> int:
    A = load_set(args.file)
    _emit(verify_bound(A, args.d).to_json(), args.output)
    return 0


def cmd_search(args) -> int:
    report = enumerate_convex(args.n, args.max_gap, workers=args.workers)
    _emit(report.to_json(attain=args.attain), args.output)
    if report.violations:
        print(f"bound violated by {len(report.violations)} gap sequence(s)", file=sys.stderr)
        return 2
    return 0


def cmd_report(args) -> int:
    if args.m_list is None and not args.recheck:
        raise UsageError("report needs --m-list, --recheck, or both")
    json_path = companion_path(args.out)
    if args.m_list is not None:
        rows = scaling_report(args.m_list, workers=args.workers)
        json_path = write_report(rows, args.out)
    summary = {"csv": str(args.out), "json": str(json_path)}
    status = 0
    if args.recheck:
        problems = recheck(json_path)
        summary["recheck"] = "ok" if not problems else "failed"
        summary["problems"] = problems
        status = 1 if problems else 0
    _emit(summary, args.output)
    return status


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {text}")
    return value


def _int_list(text: str) -> list[int]:
    return [_positive_int(x.strip()) for x in text.split(",") if x.strip()]


def _rational(text: str):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="convexreps", description="Rich differences in convex sets.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("construct", help="size-2m convex set with an m-fold difference")
    p.add_argument("--m", type=_positive_int, required=True)
    p.add_argument("--delta", type=_rational)
    p.add_argument("--integer", action="store_true", help="dilate to integers before output")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("glue", help="glue copies of the construction")
    p.add_argument("--t", type=_positive_int, required=True)
    p.add_argument("--copies", type=_positive_int, required=True)
    p.add_argument("--delta", type=_rational)
    p.add_argument("--integer", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_glue)

    p = sub.add_parser("analyze", help="representation statistics of a set file")
    p.add_argument("file")
    p.add_argument("--hist", type=_positive_int, action="append", metavar="T")
    p.add_argument("--energy", action="store_true")
    p.add_argument("--max-rep", action="store_true")
    p.add_argument("--sum-rep", action="store_true")
    p.add_argument("--csv", metavar="PATH")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="check r(d) <= floor(n/2) and list witnesses")
    p.add_argument("file")
    p.add_argument("--d", type=_rational)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="exhaustive check over integer convex sets")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--max-gap", type=_positive_int, required=True)
    p.add_argument("--attain", action="store_true")
    p.add_argument("--workers", type=_positive_int, default=1)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("report", help="scaling table over the construction family")
    p.add_argument("--m-list", type=_int_list)
    p.add_argument("--out", required=True, metavar="PATH.csv")
    p.add_argument("--recheck", action="store_true")
    p.add_argument("--workers", type=_positive_int, default=1)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvariantViolation as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 2
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ConvexityError, ValueError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
