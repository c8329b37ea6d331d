#!/usr/bin/env python3
"""Tabulate donut classes per block of D, and list the quasi-primitive numbers."""

from __future__ import annotations

import argparse
from collections import Counter
from dataclasses import dataclass

from donuts.census import DonutKind, classify
from donuts.pythagoras import primitive_perimeter_counts


@dataclass
class TableConfig:
    limit: int = 20000
    block: int = 2000


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--limit", type=int, default=TableConfig.limit)
    parser.add_argument("--block", type=int, default=TableConfig.block)
    args = parser.parse_args()
    cfg = TableConfig(args.limit, args.block)

    kinds = list(DonutKind)
    print("block".ljust(14) + "".join(k.value.rjust(16) for k in kinds))
    quasi = []
    for lo in range(1, cfg.limit + 1, cfg.block):
        hi = min(lo + cfg.block - 1, cfg.limit)
        tally: Counter = Counter()
        for D in range(lo, hi + 1):
            c = classify(D)
            tally[c.kind] += 1
            if c.kind == DonutKind.QUASI_PRIMITIVE:
                quasi.append((D, c.coprime_config_count))
        print(f"{lo}-{hi}".ljust(14) + "".join(str(tally[k]).rjust(16) for k in kinds))

    counts = primitive_perimeter_counts(cfg.limit)
    print()
    print("quasi-primitive D (coprime configurations / primitive triples):")
    for D, n in quasi:
        print(f"  {D}: {n} / {counts.get(D, 0)}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
