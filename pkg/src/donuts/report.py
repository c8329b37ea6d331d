"""Verification reports and the chunked sweep runner behind them.

A sweep splits ``1..limit`` into fixed-size chunks.  Chunk boundaries do not
depend on the worker count, and chunk results merge in ascending order, so a
report is identical for any number of workers.
"""

from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable

log = logging.getLogger(__name__)

CHUNK_SIZE = 500


@dataclass
class ChunkResult:
    checked: int = 0
    counterexamples: list[dict[str, Any]] = field(default_factory=list)
    tallies: Counter = field(default_factory=Counter)


@dataclass
class VerificationReport:
    name: str
    limit: int
    checked: int = 0
    counterexamples: list[dict[str, Any]] = field(default_factory=list)
    tallies: dict[str, int] = field(default_factory=dict)
    complete: bool = True

    @property
    def ok(self) -> bool:
        return self.complete and not self.counterexamples

    def summary(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "limit": self.limit,
            "checked": self.checked,
            "counterexamples": len(self.counterexamples),
            "tallies": dict(sorted(self.tallies.items())),
            "complete": self.complete,
            "verified": self.ok,
        }


def chunks(limit: int, size: int = CHUNK_SIZE) -> list[tuple[int, int]]:
    """Inclusive ranges covering 1..limit."""
    return [(lo, min(lo + size - 1, limit)) for lo in range(1, limit + 1, size)]


def run_sweep(
    name: str,
    check_range: Callable[[int, int], ChunkResult],
    limit: int,
    workers: int = 1,
) -> VerificationReport:
    """Run ``check_range`` over every chunk of 1..limit and merge the results.

    ``check_range`` must be a module-level function so it can be shipped to
    worker processes.  A KeyboardInterrupt stops the sweep and returns the
    chunks finished so far with ``complete=False``.
    """
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    report = VerificationReport(name=name, limit=limit)
    tallies: Counter = Counter()
    spans = chunks(limit)

    def absorb(res: ChunkResult) -> None:
        report.checked += res.checked
        report.counterexamples.extend(res.counterexamples)
        tallies.update(res.tallies)

    try:
        if workers == 1:
            for i, (lo, hi) in enumerate(spans):
                absorb(check_range(lo, hi))
                log.debug("%s: chunk %d/%d done", name, i + 1, len(spans))
        else:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                futures = [pool.submit(check_range, lo, hi) for lo, hi in spans]
                for i, fut in enumerate(futures):
                    absorb(fut.result())
                    log.debug("%s: chunk %d/%d done", name, i + 1, len(spans))
    except KeyboardInterrupt:
        report.complete = False
        log.warning("%s interrupted after %d checks; report is partial", name, report.checked)
    report.tallies = dict(sorted(tallies.items()))
    return report
