"""Every configuration of a number D, its classification, and the sweeps over D.

A configuration is a quadruple, so ``(a, b, x, y)`` and its twist
``(a, b, y, x)`` are counted separately when both are donuts.
``DonutClass.coprime_hole_count`` also gives the count with twisted holes merged.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from collections.abc import Iterable

from donuts.arith import divisors_from_factorization, factorize
from donuts.core import DonutConfig, is_coprime_config, is_twistable_definitional, is_twistable_fast
from donuts.pythagoras import primitive_triples_with_perimeter
from donuts.report import ChunkResult, VerificationReport, run_sweep


class DonutKind(str, enum.Enum):
    NOT_A_DONUT = "NotADonut"
    PLAIN = "PlainDonut"
    PRIMITIVE = "Primitive"
    QUASI_PRIMITIVE = "QuasiPrimitive"


@dataclass(frozen=True)
class DonutClass:
    kind: DonutKind
    coprime_config_count: int
    total_config_count: int
    coprime_hole_count: int = 0


def configurations(D: int) -> list[DonutConfig]:
    """All donuts with area D, sorted by ``a`` then ``x``, both descending.

    Exterior sides come from divisor pairs of D; hole sides from divisor pairs of D/2.
    """
    if D < 1:
        raise ValueError(f"D must be >= 1, got {D}")
    if D % 2:
        return []
    fac = factorize(D)
    ext = divisors_from_factorization(fac)
    half_fac = dict(fac)
    half_fac[2] -= 1
    holes = divisors_from_factorization(half_fac)
    half = D // 2
    out = []
    for a in reversed(ext):
        b = D // a
        if b > a:
            break
        if b < 2:
            continue
        for x in reversed(holes):
            if x >= a:
                continue
            y = half // x
            if y >= b:
                break
            out.append(DonutConfig(a, b, x, y))
    return out


def classify(D: int) -> DonutClass:
    configs = configurations(D)
    coprime = [c for c in configs if is_coprime_config(c)]
    holes = {(c.a, c.b, min(c.x, c.y), max(c.x, c.y)) for c in coprime}
    n = len(coprime)
    if not configs:
        kind = DonutKind.NOT_A_DONUT
    elif n == 0:
        kind = DonutKind.PLAIN
    elif n == 1:
        kind = DonutKind.PRIMITIVE
    else:
        kind = DonutKind.QUASI_PRIMITIVE
    return DonutClass(kind, n, len(configs), len(holes))


def donut_numbers(limit: int, kinds: Iterable[DonutKind | str]) -> list[int]:
    """All D <= limit whose kind is in ``kinds``, ascending."""
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    wanted = {DonutKind(k) for k in kinds}
    return [D for D in range(1, limit + 1) if classify(D).kind in wanted]


def _theorem1_range(lo: int, hi: int) -> ChunkResult:
    res = ChunkResult()
    for D in range(lo, hi + 1):
        cls = classify(D)
        has_coprime = cls.coprime_config_count >= 1
        is_perimeter = bool(primitive_triples_with_perimeter(D))
        res.checked += 1
        res.tallies[cls.kind.value] += 1
        if has_coprime:
            res.tallies["matching"] += 1
        if has_coprime != is_perimeter:
            res.counterexamples.append(
                {"D": D, "coprime_configs": cls.coprime_config_count, "primitive_perimeter": is_perimeter}
            )
    return res


def verify_theorem1(limit: int, workers: int = 1) -> VerificationReport:
    """Check, for every D <= limit, that D has a coprime configuration iff it is a primitive perimeter."""
    return run_sweep("theorem1", _theorem1_range, limit, workers)


def _theorem2_range(lo: int, hi: int) -> ChunkResult:
    res = ChunkResult()
    for D in range(lo, hi + 1):
        for c in configurations(D):
            fast = is_twistable_fast(c)
            res.checked += 1
            res.tallies["twistable" if fast else "not_twistable"] += 1
            if fast != is_twistable_definitional(c):
                res.counterexamples.append({"config": list(c.as_tuple()), "fast": fast})
    return res


def verify_theorem2(limit: int, workers: int = 1) -> VerificationReport:
    """Compare the closed-form twistability test with the definition on every donut of area <= limit."""
    return run_sweep("theorem2", _theorem2_range, limit, workers)
