"""Naive reference searches used to check the fast paths.

Nothing here shares code with the factoring or divisor enumeration in the
rest of the package.  Each donut constraint is restated inline.  The
searches are slow on purpose.

Cost: ``brute_configurations(D)`` is O(D + sigma(D)), so a sweep to D is
O(D^2).  ``brute_triple_sums(limit)`` is O(limit^2).  ``brute_square_sweep``
is O(max_side^2).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, isqrt

from donuts.core import DonutConfig


@dataclass(frozen=True)
class SweepLimits:
    max_area: int
    max_side: int

    def __post_init__(self) -> None:
        if self.max_area < 1 or self.max_side < 1:
            raise ValueError(f"sweep limits must be >= 1: {self}")


@dataclass
class SquareFindings:
    square_donuts: list[tuple[int, int, int, int]] = field(default_factory=list)
    square_holed: list[tuple[int, int, int, int]] = field(default_factory=list)


def _naive_quads(D: int):
    for a in range(2, D):
        if D % a:
            continue
        b = D // a
        if b < 2 or b > a:
            continue
        for x in range(1, a):
            if (a * b) % (2 * x):
                continue
            y = a * b // (2 * x)
            if 1 <= y < b and a * b == 2 * x * y:
                yield (a, b, x, y)


def brute_configurations(D: int) -> list[DonutConfig]:
    """Every donut of area D found by scanning each exterior side and each hole side."""
    if D < 1:
        raise ValueError(f"D must be >= 1, got {D}")
    return [DonutConfig(*q) for q in _naive_quads(D)]


def brute_triple_sums(limit: int, primitive_only: bool = False) -> set[int]:
    """Perimeters <= limit of triples x <= y < z with x^2 + y^2 = z^2."""
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    sums = set()
    for x in range(1, limit):
        if 3 * x > limit:
            break
        for y in range(x, limit):
            zz = x * x + y * y
            z = isqrt(zz)
            if x + y + z > limit:
                break
            if z * z == zz and (not primitive_only or gcd(x, y) == 1):
                sums.add(x + y + z)
    return sums


def brute_square_sweep(limits: SweepLimits) -> dict[int, SquareFindings]:
    """Square donuts (n, n, a, b) and square-holed donuts (a, b, n, n) for every n <= max_side.

    Only donuts whose area is at most ``max_area`` are reported.
    """
    out: dict[int, SquareFindings] = {}
    for n in range(1, limits.max_side + 1):
        found = SquareFindings()
        nn = n * n
        if nn <= limits.max_area:
            for a in range(1, n):
                if nn % (2 * a) == 0:
                    b = nn // (2 * a)
                    if 1 <= b < n:
                        found.square_donuts.append((n, n, a, b))
        if 2 * nn <= limits.max_area:
            # exterior b <= a with a * b = 2n^2 forces b <= isqrt(2n^2)
            for b in range(n + 1, isqrt(2 * nn) + 1):
                if (2 * nn) % b == 0:
                    a = 2 * nn // b
                    if b <= a and n < b:
                        found.square_holed.append((a, b, n, n))
        found.square_donuts.sort(reverse=True)
        found.square_holed.sort(reverse=True)
        out[n] = found
    return out
