"""Pythagorean triples through Euclid's formula, and their perimeters.

Every triple is ``k * (p^2 - q^2, 2pq, p^2 + q^2)`` for exactly one choice of
``k >= 1`` and coprime ``q < p`` of opposite parity.  Its perimeter is
``2kp(p + q)``.  Since that exceeds ``2p^2``, scanning ``p <= isqrt(limit // 2)``
reaches every triple with perimeter up to ``limit``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import gcd, isqrt

from donuts.arith import checked_mul


@dataclass(frozen=True)
class PythTriple:
    legs: tuple[int, int]
    hyp: int
    primitive: bool

    def __post_init__(self) -> None:
        x, y = self.legs
        if not 0 < x <= y:
            raise ValueError(f"legs must be positive and ascending, got {self.legs}")
        if x * x + y * y != self.hyp * self.hyp:
            raise ValueError(f"{self.legs}, {self.hyp} is not a Pythagorean triple")
        if self.primitive != (gcd(x, y) == 1):
            raise ValueError(f"primitive flag wrong for {self.legs}, {self.hyp}")

    @property
    def perimeter(self) -> int:
        return self.legs[0] + self.legs[1] + self.hyp

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.legs[0], self.legs[1], self.hyp)


@dataclass(frozen=True, order=True)
class EuclidParams:
    k: int
    p: int
    q: int

    def __post_init__(self) -> None:
        if min(self.k, self.p, self.q) < 1:
            raise ValueError(f"Euclid parameters must be positive: {self}")
        if not self.q < self.p:
            raise ValueError(f"Euclid parameters need q < p: {self}")

    @property
    def generates_primitive(self) -> bool:
        return self.k == 1 and gcd(self.p, self.q) == 1 and (self.p - self.q) % 2 == 1

    @property
    def perimeter(self) -> int:
        return checked_mul(2, self.k, self.p, self.p + self.q)


def euclid_triple(e: EuclidParams) -> PythTriple:
    k, p, q = e.k, e.p, e.q
    odd = checked_mul(k, p * p - q * q)
    even = checked_mul(2, k, p, q)
    hyp = checked_mul(k, p * p + q * q)
    return PythTriple(legs=(min(odd, even), max(odd, even)), hyp=hyp, primitive=e.generates_primitive)


def _primitive_pairs(limit: int):
    """Yield (p, q, perimeter) for coprime opposite-parity q < p with perimeter <= limit."""
    for p in range(2, isqrt(limit // 2) + 1):
        for q in range(1 + p % 2, p, 2):
            per = 2 * p * (p + q)
            if per > limit:
                break
            if gcd(p, q) == 1:
                yield p, q, per


def primitive_perimeter_counts(limit: int) -> dict[int, int]:
    """Perimeter -> number of primitive triples with that perimeter, for perimeters <= limit."""
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    counts = Counter(per for _, _, per in _primitive_pairs(limit))
    return dict(sorted(counts.items()))


def primitive_perimeters(limit: int) -> list[int]:
    """Distinct perimeters of primitive triples, ascending, up to ``limit`` (OEIS A024364)."""
    return list(primitive_perimeter_counts(limit))


def primitive_triples_with_perimeter(n: int) -> list[PythTriple]:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    out = []
    if n % 2:
        return out
    half = n // 2
    for p in range(2, isqrt(half) + 1):
        if half % p:
            continue
        q = half // p - p
        if 0 < q < p and (p - q) % 2 == 1 and gcd(p, q) == 1:
            out.append(euclid_triple(EuclidParams(1, p, q)))
    out.sort(key=lambda t: t.legs[0])
    return out


def triple_sum_decompositions(n: int) -> list[EuclidParams]:
    """Every (k, p, q) with coprime opposite-parity q < p and 2kp(p+q) == n, by (p, q)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return [EuclidParams(n // per, p, q) for p, q, per in _primitive_pairs(n) if n % per == 0]


def is_triple_sum(n: int) -> bool:
    """True iff n is the perimeter of some Pythagorean triple, primitive or not."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n % 2:
        return False
    return any(n % per == 0 for _, _, per in _primitive_pairs(n))
