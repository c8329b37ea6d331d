#!/usr/bin/env python3
"""Run every theorem sweep at its configured limit and write a JSON summary."""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from donuts.census import verify_theorem1, verify_theorem2
from donuts.squares import verify_no_square_square_hole, verify_theorem3, verify_theorem4


@dataclass
class SweepConfig:
    theorem1_limit: int = 20000
    theorem2_limit: int = 5000
    theorem3_limit: int = 2000
    theorem4_limit: int = 2000
    square_square_hole_limit: int = 5000
    workers: int = 1


def main() -> int:
    defaults = SweepConfig()
    parser = argparse.ArgumentParser(description=__doc__)
    for name, value in asdict(defaults).items():
        parser.add_argument(f"--{name.replace('_', '-')}", type=int, default=value)
    parser.add_argument("--output", type=Path, help="write the JSON summary here (default: stdout)")
    args = parser.parse_args()
    cfg = SweepConfig(**{k: getattr(args, k) for k in asdict(defaults)})

    runs = [
        (verify_theorem1, cfg.theorem1_limit),
        (verify_theorem2, cfg.theorem2_limit),
        (verify_theorem3, cfg.theorem3_limit),
        (verify_theorem4, cfg.theorem4_limit),
        (verify_no_square_square_hole, cfg.square_square_hole_limit),
    ]
    results = []
    for sweep, limit in runs:
        start = time.perf_counter()
        report = sweep(limit, cfg.workers)
        summary = report.summary()
        summary["seconds"] = round(time.perf_counter() - start, 3)
        results.append(summary)
        print(f"{summary['name']:<24} limit={limit:<6} counterexamples={summary['counterexamples']} {summary['seconds']}s")

    payload = json.dumps({"config": asdict(cfg), "sweeps": results}, indent=2) + "\n"
    if args.output:
        args.output.write_text(payload, encoding="utf-8")
    else:
        print(payload, end="")
    return 0 if all(r["verified"] for r in results) else 1


if __name__ == "__main__":
    raise SystemExit(main())
