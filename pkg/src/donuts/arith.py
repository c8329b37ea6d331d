"""Small integer helpers: trial-division factoring, divisors, valuations, checked products."""

from __future__ import annotations

from math import gcd

U64_MAX = (1 << 64) - 1


def checked_mul(*factors: int) -> int:
    """Multiply, raising OverflowError if the product leaves the unsigned 64-bit range."""
    out = 1
    for f in factors:
        out *= f
        if out > U64_MAX:
            raise OverflowError(f"product exceeds 64-bit range: {factors}")
    return out


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 by trial division, as {prime: exponent}."""
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    fac: dict[int, int] = {}
    while n % 2 == 0:
        fac[2] = fac.get(2, 0) + 1
        n //= 2
    p = 3
    while p * p <= n:
        while n % p == 0:
            fac[p] = fac.get(p, 0) + 1
            n //= p
        p += 2
    if n > 1:
        fac[n] = fac.get(n, 0) + 1
    return fac


def divisors_from_factorization(fac: dict[int, int]) -> list[int]:
    divs = [1]
    for p, e in fac.items():
        step = []
        pk = 1
        for _ in range(e + 1):
            step.extend(d * pk for d in divs)
            pk *= p
        divs = step
    divs.sort()
    return divs


def divisors(n: int) -> list[int]:
    """Sorted positive divisors of n."""
    return divisors_from_factorization(factorize(n))


def valuation(m: int, p: int) -> int:
    """Exponent of the prime p in m (m >= 1)."""
    if m < 1:
        raise ValueError(f"valuation needs m >= 1, got {m}")
    v = 0
    while m % p == 0:
        m //= p
        v += 1
    return v
