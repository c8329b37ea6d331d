"""Command-line interface: ``donuts <command> ...``.

Exit codes: 0 success or verified, 1 negative result (not a donut, or a
counterexample found), 2 usage error, 130 sweep interrupted.  Results go to
stdout.  Progress and diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from typing import Any, Callable

from donuts.census import classify, configurations, verify_theorem1, verify_theorem2
from donuts.core import DonutConfig, is_coprime_config, is_twistable_definitional, is_twistable_fast, validate
from donuts.pythagoras import primitive_perimeter_counts, triple_sum_decompositions
from donuts.render import donut_svg
from donuts.report import VerificationReport
from donuts.squares import (
    square_donut_all,
    square_hole_all,
    square_hole_witness,
    verify_no_square_square_hole,
    verify_theorem3,
    verify_theorem4,
)

log = logging.getLogger("donuts")

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_INTERRUPTED = 0, 1, 2, 130

SWEEPS: dict[str, Callable[[int, int], VerificationReport]] = {
    "1": verify_theorem1,
    "2": verify_theorem2,
    "3": verify_theorem3,
    "4": verify_theorem4,
    "no-square-square-hole": verify_no_square_square_hole,
}


def positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {v}")
    return v


def _default_threads() -> int:
    raw = os.environ.get("DONUT_THREADS")
    if raw is None:
        return 1
    try:
        return positive_int(raw)
    except argparse.ArgumentTypeError as exc:
        raise SystemExit(f"donuts: DONUT_THREADS {exc}") from None


def _emit_json(obj: Any) -> None:
    print(json.dumps(obj, separators=(",", ":")))


def _emit_csv(header: list[str], rows: list[list[Any]]) -> None:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    sys.stdout.write(buf.getvalue())


def _config_or_exit(a: int, b: int, x: int, y: int) -> DonutConfig | None:
    report = validate(a, b, x, y)
    if not report.valid:
        print(f"({a},{b},{x},{y}) is not a donut: violates {', '.join(report.violations)}", file=sys.stderr)
        return None
    return DonutConfig(a, b, x, y)


def cmd_check(args: argparse.Namespace) -> int:
    quad = (args.a, args.b, args.x, args.y)
    report = validate(*quad)
    if args.format == "json":
        _emit_json({"config": list(quad), "valid": report.valid, "violations": report.violations})
    elif args.format == "csv":
        _emit_csv(["a", "b", "x", "y", "valid", "violations"], [[*quad, report.valid, ";".join(report.violations)]])
    elif report.valid:
        print("valid")
    else:
        print("invalid: " + ", ".join(report.violations))
    return EXIT_OK if report.valid else EXIT_NEGATIVE


def _class_record(D: int, with_configs: bool) -> dict[str, Any]:
    cls = classify(D)
    rec: dict[str, Any] = {"D": D}
    if with_configs:
        rec["configs"] = [list(c.as_tuple()) for c in configurations(D)]
    rec.update(
        {
            "class": cls.kind.value,
            "coprime_count": cls.coprime_config_count,
            "total_count": cls.total_config_count,
            "coprime_hole_count": cls.coprime_hole_count,
        }
    )
    return rec


def cmd_enumerate(args: argparse.Namespace) -> int:
    configs = configurations(args.D)
    if args.format == "json":
        _emit_json(_class_record(args.D, with_configs=True))
    elif args.format == "csv":
        _emit_csv(
            ["D", "a", "b", "x", "y", "coprime"],
            [[args.D, *c.as_tuple(), int(is_coprime_config(c))] for c in configs],
        )
    else:
        for c in configs:
            print(c)
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    numbers = range(1, args.range + 1) if args.range else [args.D]
    if args.format == "csv":
        rows = []
        for D in numbers:
            r = _class_record(D, with_configs=False)
            rows.append([D, r["class"], r["coprime_count"], r["total_count"], r["coprime_hole_count"]])
        _emit_csv(["D", "class", "coprime_count", "total_count", "coprime_hole_count"], rows)
        return EXIT_OK
    for D in numbers:
        rec = _class_record(D, with_configs=args.format == "json")
        if args.format == "json":
            _emit_json(rec)
        else:
            print(f"{D} {rec['class']} coprime={rec['coprime_count']} total={rec['total_count']}")
    return EXIT_OK


def cmd_twistable(args: argparse.Namespace) -> int:
    d = _config_or_exit(args.a, args.b, args.x, args.y)
    if d is None:
        return EXIT_NEGATIVE
    fast, definitional = is_twistable_fast(d), is_twistable_definitional(d)
    if args.format == "json":
        _emit_json({"config": list(d.as_tuple()), "twistable": definitional, "fast": fast, "twisted": [d.a, d.b, d.y, d.x]})
    elif args.format == "csv":
        _emit_csv(["a", "b", "x", "y", "twistable", "fast"], [[*d.as_tuple(), definitional, fast]])
    else:
        print("twistable" if definitional else "not twistable")
    return EXIT_OK


def _emit_configs(key: str, n: int, configs: list[DonutConfig], fmt: str, extra: dict[str, Any]) -> None:
    if fmt == "json":
        _emit_json({key: n, "configs": [list(c.as_tuple()) for c in configs], **extra})
    elif fmt == "csv":
        _emit_csv([key, "a", "b", "x", "y"], [[n, *c.as_tuple()] for c in configs])
    else:
        for c in configs:
            print(c)


def cmd_square(args: argparse.Namespace) -> int:
    extra = {"triple_sums": [[e.k, e.p, e.q] for e in triple_sum_decompositions(args.n)]}
    _emit_configs("n", args.n, square_donut_all(args.n), args.format, extra)
    return EXIT_OK


def cmd_square_hole(args: argparse.Namespace) -> int:
    w = square_hole_witness(args.n)
    extra = {"witness": None if w is None else [w.p, w.q]}
    _emit_configs("n", args.n, square_hole_all(args.n), args.format, extra)
    return EXIT_OK


def cmd_sequence(args: argparse.Namespace) -> int:
    counts = primitive_perimeter_counts(args.limit)
    if args.format == "json":
        _emit_json({"limit": args.limit, "terms": list(counts), "multiplicity": {str(k): v for k, v in counts.items()}})
    elif args.format == "csv":
        _emit_csv(["perimeter", "count"], [[k, v] for k, v in counts.items()])
    elif args.counts:
        for k, v in counts.items():
            print(k, v)
    elif counts:
        print(" ".join(map(str, counts)))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    sweep = SWEEPS[args.theorem]
    print(f"verifying {args.theorem} up to {args.limit} with {args.threads} worker(s)", file=sys.stderr)
    report = sweep(args.limit, args.threads)
    summary = report.summary()
    if args.format == "json":
        for ce in report.counterexamples:
            _emit_json({"counterexample": ce})
        _emit_json(summary)
    elif args.format == "csv":
        header = ["name", "limit", "checked", "counterexamples", "complete", "verified"]
        tallies = list(summary["tallies"])
        _emit_csv(header + tallies, [[summary[h] for h in header] + [summary["tallies"][t] for t in tallies]])
    else:
        for ce in report.counterexamples:
            print("counterexample:", json.dumps(ce, separators=(",", ":")))
        print(f"sweep: {report.name}")
        print(f"limit: {report.limit}")
        print(f"checked: {report.checked}")
        print(f"counterexamples: {len(report.counterexamples)}")
        for k, v in summary["tallies"].items():
            print(f"{k}: {v}")
        print("status: " + ("verified" if report.ok else "INCOMPLETE" if not report.complete else "FAILED"))
    if not report.complete:
        return EXIT_INTERRUPTED
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def cmd_render(args: argparse.Namespace) -> int:
    d = _config_or_exit(args.a, args.b, args.x, args.y)
    if d is None:
        return EXIT_NEGATIVE
    svg = donut_svg(d, args.scale)
    if args.out is None:
        sys.stdout.write(svg)
        return EXIT_OK
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    except OSError as exc:
        print(f"donuts: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["plain", "json", "csv"], default="plain")

    parser = argparse.ArgumentParser(prog="donuts", description="Rectangular donuts: rectangles with half-area holes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def quad(p: argparse.ArgumentParser) -> None:
        for name in "abxy":
            p.add_argument(name, type=positive_int)

    p = sub.add_parser("check", parents=[fmt], help="validate a quadruple (a,b,x,y)")
    quad(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", parents=[fmt], help="list every configuration of D")
    p.add_argument("D", type=positive_int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classify", parents=[fmt], help="classify D, or every D up to --range")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("D", type=positive_int, nargs="?")
    g.add_argument("--range", type=positive_int, metavar="N")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("twistable", parents=[fmt], help="can the hole be rotated 90 degrees")
    quad(p)
    p.set_defaults(func=cmd_twistable)

    p = sub.add_parser("square", parents=[fmt], help="all donuts with an n x n exterior")
    p.add_argument("n", type=positive_int)
    p.set_defaults(func=cmd_square)

    p = sub.add_parser("square-hole", parents=[fmt], help="all donuts with an n x n hole")
    p.add_argument("n", type=positive_int)
    p.set_defaults(func=cmd_square_hole)

    p = sub.add_parser("sequence", parents=[fmt], help="primitive Pythagorean perimeters (A024364)")
    p.add_argument("--limit", type=positive_int, required=True)
    p.add_argument("--counts", action="store_true", help="print each perimeter with its multiplicity")
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser("verify", parents=[fmt], help="exhaustively verify a classification theorem")
    p.add_argument("--theorem", choices=list(SWEEPS), required=True)
    p.add_argument("--limit", type=positive_int, required=True)
    p.add_argument("--threads", type=positive_int, default=None, help="worker processes (default $DONUT_THREADS or 1)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="write an SVG diagram of a donut")
    quad(p)
    p.add_argument("-o", "--out", default=None, help="output path (default stdout)")
    p.add_argument("--scale", type=positive_int, default=20, help="pixels per unit")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "threads", 0) is None:
            args.threads = _default_threads()
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(exc.code, file=sys.stderr)
            return EXIT_USAGE
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.WARNING, stream=sys.stderr, format="%(levelname)s %(message)s")
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
