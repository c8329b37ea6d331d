"""Exit criteria, one test per criterion, each at its stated limit and time bound.

Every test records a PASS/FAIL line; the summary is printed at the end of the
pytest run (see ``pytest_terminal_summary`` in conftest.py).
"""

from __future__ import annotations

import time
from math import gcd

from donuts import cli
from donuts.arith import lcm, valuation
from donuts.census import DonutKind, configurations, donut_numbers, verify_theorem1, verify_theorem2
from donuts.core import DonutConfig, is_twistable_definitional, is_twistable_fast, validate
from donuts.oracle import brute_configurations, brute_triple_sums
from donuts.pythagoras import is_triple_sum, primitive_perimeters
from donuts.squares import (
    CoprimeDivisorPair,
    square_donut_all,
    square_hole_all,
    square_hole_construct,
    square_hole_witnesses,
    verify_no_square_square_hole,
    verify_theorem3,
    verify_theorem4,
)

RESULTS: dict[int, tuple[bool, str]] = {}


def record(criterion: int, ok: bool, detail: str) -> None:
    RESULTS[criterion] = (ok, detail)
    assert ok, f"criterion {criterion}: {detail}"


def timed(fn, *args):
    start = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - start


def orbit(a, b, x, y):
    return frozenset({(a, b, x, y), (a, b, y, x)})


def test_1_configurations_of_84():
    configs, secs = timed(configurations, 84)
    got = {c.as_tuple() for c in configs}
    ok = got == {(28, 3, 21, 2), (21, 4, 14, 3), (12, 7, 7, 6)} and len(configs) == 3 and secs < 0.010
    record(1, ok, f"configurations(84)={sorted(got, reverse=True)} in {secs * 1e3:.2f} ms (< 10 ms)")


def test_2_primitive_donut_numbers_below_100():
    start = time.perf_counter()
    nums = donut_numbers(99, {DonutKind.PRIMITIVE, DonutKind.QUASI_PRIMITIVE})
    perims = primitive_perimeters(99)
    secs = time.perf_counter() - start
    ok = nums == [12, 30, 40, 56, 70, 84, 90] == perims and secs < 1.0
    record(2, ok, f"donut_numbers={nums}, primitive_perimeters={perims} in {secs:.3f} s (< 1 s)")


def test_3_theorem1_sweep():
    report, secs = timed(verify_theorem1, 20000)
    ok = report.ok and report.checked == 20000 and secs < 60
    record(3, ok, f"D <= 20000: {len(report.counterexamples)} counterexamples, tallies {report.tallies}, {secs:.1f} s (< 60 s)")


def test_4_theorem2_sweep():
    report, secs = timed(verify_theorem2, 5000)
    boundary = DonutConfig(22, 20, 20, 11)
    example = DonutConfig(21, 20, 15, 14)
    spots = (
        not is_twistable_fast(boundary)
        and not is_twistable_definitional(boundary)
        and is_twistable_fast(example)
        and is_twistable_definitional(example)
    )
    ok = report.ok and spots and secs < 30
    record(4, ok, f"{report.checked} configs with D <= 5000: {len(report.counterexamples)} mismatches, spots {spots}, {secs:.1f} s (< 30 s)")


def test_5_theorem3_sweep():
    start = time.perf_counter()
    report = verify_theorem3(2000)
    bad_outputs = 0
    for n in range(1, 2001):
        for w in square_hole_witnesses(n):
            if not validate(*square_hole_construct(n, w).as_tuple()).valid:
                bad_outputs += 1
        for d in square_hole_all(n):
            if not validate(*d.as_tuple()).valid:
                bad_outputs += 1
    spot = square_hole_construct(30, CoprimeDivisorPair(5, 6)).as_tuple()
    spot_ok = spot == (50, 36, 30, 30) and CoprimeDivisorPair(5, 6) in square_hole_witnesses(30)
    secs = time.perf_counter() - start
    ok = report.ok and bad_outputs == 0 and spot_ok and secs < 60
    record(5, ok, f"n <= 2000: {len(report.counterexamples)} counterexamples, {bad_outputs} invalid outputs, (5,6)->{spot}, {secs:.1f} s (< 60 s)")


def test_6_theorem4_sweep():
    start = time.perf_counter()
    report = verify_theorem4(2000)
    mismatches = failures = 0
    for n in range(1, 2001):
        found = square_donut_all(n)
        if bool(found) != is_triple_sum(n):
            mismatches += 1
        for d in found:
            if lcm(gcd(n, d.x), gcd(n, d.y)) != n:
                failures += 1
            if valuation(d.x, 2) + valuation(d.y, 2) + 1 != 2 * valuation(n, 2):
                failures += 1
    holes12 = {frozenset((d.x, d.y)) for d in square_donut_all(12)}
    orbits90 = {orbit(*d.as_tuple()) for d in square_donut_all(90)}
    spots = (
        frozenset((8, 9)) in holes12
        and square_donut_all(9) == []
        and square_donut_all(10) == []
        and orbits90 == {orbit(90, 90, 81, 50), orbit(90, 90, 75, 54)}
    )
    secs = time.perf_counter() - start
    ok = report.ok and mismatches == 0 and failures == 0 and spots and secs < 60
    record(6, ok, f"n <= 2000: {len(report.counterexamples)} counterexamples, {mismatches} mismatches, {failures} lcm/valuation failures, spots {spots}, {secs:.1f} s (< 60 s)")


def test_7_no_square_holed_square():
    report, secs = timed(verify_no_square_square_hole, 5000)
    ok = report.ok and report.checked == 5000 and secs < 30
    record(7, ok, f"n <= 5000: {len(report.counterexamples)} square-holed squares, {secs:.1f} s (< 30 s)")


def test_8_oracle_equivalence():
    start = time.perf_counter()
    config_div = [D for D in range(1, 5001) if set(brute_configurations(D)) != set(configurations(D))]
    sums = brute_triple_sums(2000)
    sum_div = [n for n in range(1, 2001) if (n in sums) != is_triple_sum(n)]
    secs = time.perf_counter() - start
    ok = not config_div and not sum_div
    record(8, ok, f"configurations D <= 5000: {len(config_div)} divergences; triple sums n <= 2000: {len(sum_div)} divergences ({secs:.1f} s)")


SWEEP_ARGS = [("1", 20000), ("2", 5000), ("3", 2000), ("4", 2000), ("no-square-square-hole", 5000)]


def test_9_determinism_across_threads(capsys):
    divergent = []
    for theorem, limit in SWEEP_ARGS:
        for fmt in ("plain", "json"):
            outputs = []
            for threads in (1, 2, 8):
                code = cli.main(["verify", "--theorem", theorem, "--limit", str(limit), "--threads", str(threads), "--format", fmt])
                outputs.append((code, capsys.readouterr().out.encode()))
            if len(set(outputs)) != 1 or outputs[0][0] != 0:
                divergent.append((theorem, fmt))
    record(9, not divergent, f"{len(SWEEP_ARGS) * 2} sweep outputs byte-identical for 1, 2, 8 threads; divergent: {divergent}")
