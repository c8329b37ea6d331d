"""Square-holed donuts ``(a, b, n, n)`` and square donuts ``(n, n, a, b)``.

A square hole of side n fits exactly when n has coprime divisors p < q < 2p.
The exterior is then ``2pn/q`` by ``qn/p``.  A square exterior of side n has a
donut exactly when n is a Pythagorean perimeter ``2kp(p + q)``.  The hole is
then ``2kp^2`` by ``k(p + q)^2``.

The enumerators here never use those constructions.  ``square_hole_all`` scans
divisor pairs of ``2n^2`` and ``square_donut_all`` scans divisor pairs of
``n^2 / 2``, so each sweep compares two independent routes.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from donuts.arith import checked_mul, divisors, divisors_from_factorization, factorize, lcm, valuation
from donuts.core import DonutConfig, canonical, is_donut, validate, InvalidDonutError
from donuts.pythagoras import EuclidParams, is_triple_sum, primitive_triples_with_perimeter, triple_sum_decompositions
from donuts.report import ChunkResult, VerificationReport, run_sweep


@dataclass(frozen=True, order=True)
class CoprimeDivisorPair:
    p: int
    q: int

    def check(self, n: int) -> None:
        """Raise ValueError unless (p, q) witnesses a square hole of side n."""
        p, q = self.p, self.q
        if p < 1 or n % p or n % q:
            raise ValueError(f"{self} are not both divisors of {n}")
        if gcd(p, q) != 1:
            raise ValueError(f"{self} are not coprime")
        if not p < q < 2 * p:
            raise ValueError(f"{self} does not satisfy p < q < 2p")


@dataclass(frozen=True)
class GcdDecomposition:
    h: int
    k: int
    n_h: int
    n_k: int


def square_hole_witnesses(n: int) -> list[CoprimeDivisorPair]:
    """Every coprime divisor pair p < q < 2p of n, in lexicographic order."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    divs = divisors(n)
    out = []
    for i, p in enumerate(divs):
        for q in divs[i + 1:]:
            if q >= 2 * p:
                break
            if gcd(p, q) == 1:
                out.append(CoprimeDivisorPair(p, q))
    return out


def square_hole_witness(n: int) -> CoprimeDivisorPair | None:
    """Lexicographically smallest coprime divisor pair p < q < 2p of n, or None."""
    witnesses = square_hole_witnesses(n)
    return witnesses[0] if witnesses else None


def square_hole_construct(n: int, w: CoprimeDivisorPair) -> DonutConfig:
    w.check(n)
    a = checked_mul(2, w.p, n) // w.q
    b = checked_mul(w.q, n) // w.p
    return DonutConfig(*canonical(a, b, n, n))


def square_hole_all(n: int) -> list[DonutConfig]:
    """Every donut with an n x n hole, ``a`` descending."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    fac = {p: 2 * e for p, e in factorize(n).items()}
    fac[2] = fac.get(2, 0) + 1
    area = checked_mul(2, n, n)
    out = []
    for b in divisors_from_factorization(fac):
        a = area // b
        if b <= n:
            continue
        if b > a:
            break
        out.append(DonutConfig(a, b, n, n))
    out.sort(reverse=True)
    return out


def square_donut_all(n: int) -> list[DonutConfig]:
    """Every donut with an n x n exterior, hole side ``a`` descending (both hole orientations)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n % 2:
        return []
    fac = {p: 2 * e for p, e in factorize(n).items()}
    fac[2] -= 1
    half = checked_mul(n, n) // 2
    out = []
    for a in reversed(divisors_from_factorization(fac)):
        b = half // a
        if a >= n:
            continue
        if b >= n:
            break
        out.append(DonutConfig(n, n, a, b))
    return out


def square_donut_from_params(n: int, e: EuclidParams) -> DonutConfig:
    """The square donut ``(n, n, 2kp^2, k(p+q)^2)`` for a perimeter decomposition of n."""
    if e.perimeter != n:
        raise ValueError(f"{e} has perimeter {e.perimeter}, not {n}")
    a = checked_mul(2, e.k, e.p, e.p)
    b = checked_mul(e.k, e.p + e.q, e.p + e.q)
    return DonutConfig(n, n, a, b)


def gcd_decompose(n: int, a: int, b: int) -> GcdDecomposition:
    """Split the square donut (n, n, a, b) into h = gcd(n, a) and k = gcd(n, b) with cofactors."""
    report = validate(n, n, a, b)
    if not report.valid:
        raise InvalidDonutError((n, n, a, b), report.violations)
    h, k = gcd(n, a), gcd(n, b)
    return GcdDecomposition(h=h, k=k, n_h=n // h, n_k=n // k)


def valuation_identity_holds(n: int, a: int, b: int) -> bool:
    """v2(a) + v2(b) + 1 == 2 v2(n), and v_P(a) + v_P(b) == 2 v_P(n) for odd primes P of n."""
    for p in factorize(n):
        lhs = valuation(a, p) + valuation(b, p) + (1 if p == 2 else 0)
        if lhs != 2 * valuation(n, p):
            return False
    # a*b == n^2/2, so a and b have no primes outside n
    return n % 2 == 0


def _theorem3_range(lo: int, hi: int) -> ChunkResult:
    res = ChunkResult()
    for n in range(lo, hi + 1):
        found = square_hole_all(n)
        w = square_hole_witness(n)
        res.checked += 1
        res.tallies["realizable" if found else "not_realizable"] += 1
        if bool(found) != (w is not None):
            res.counterexamples.append({"n": n, "found": len(found), "witness": w and [w.p, w.q]})
            continue
        if w is not None:
            built = square_hole_construct(n, w)
            if built not in found:
                res.counterexamples.append({"n": n, "constructed": list(built.as_tuple()), "missing": True})
            if len(factorize(n)) < 2:
                res.counterexamples.append({"n": n, "prime_power_with_square_hole": True})
    return res


def verify_theorem3(limit: int, workers: int = 1) -> VerificationReport:
    """Check, for every n <= limit, that an n x n hole fits iff a coprime pair p < q < 2p divides n."""
    return run_sweep("theorem3", _theorem3_range, limit, workers)


def _theorem4_range(lo: int, hi: int) -> ChunkResult:
    res = ChunkResult()
    for n in range(lo, hi + 1):
        found = square_donut_all(n)
        triple_sum = is_triple_sum(n)
        res.checked += 1
        res.tallies["realizable" if found else "not_realizable"] += 1
        if bool(found) != triple_sum:
            res.counterexamples.append({"n": n, "found": len(found), "triple_sum": triple_sum})
            continue
        for d in found:
            dec = gcd_decompose(n, d.x, d.y)
            problems = []
            if dec.h == 1 or dec.k == 1:
                problems.append("coprime side")
            if lcm(dec.h, dec.k) != n:
                problems.append("lcm(h,k) != n")
            if not primitive_triples_with_perimeter(dec.n_h * dec.n_k):
                problems.append("n_h*n_k not a primitive perimeter")
            if not valuation_identity_holds(n, d.x, d.y):
                problems.append("valuation identity")
            if problems:
                res.counterexamples.append({"n": n, "config": list(d.as_tuple()), "problems": problems})
        for e in triple_sum_decompositions(n):
            built = square_donut_from_params(n, e)
            if built not in found:
                res.counterexamples.append({"n": n, "params": [e.k, e.p, e.q], "missing": True})
    return res


def verify_theorem4(limit: int, workers: int = 1) -> VerificationReport:
    """Check, for every n <= limit, that an n x n donut exists iff n is a Pythagorean perimeter."""
    return run_sweep("theorem4", _theorem4_range, limit, workers)


def _no_square_square_hole_range(lo: int, hi: int) -> ChunkResult:
    res = ChunkResult()
    for n in range(lo, hi + 1):
        res.checked += 1
        for d in square_donut_all(n):
            if d.x == d.y:
                res.counterexamples.append({"n": n, "config": list(d.as_tuple())})
        for x in range(1, n):
            if 2 * x * x == n * n and is_donut(n, n, x, x):
                res.counterexamples.append({"n": n, "config": [n, n, x, x]})
    return res


def verify_no_square_square_hole(limit: int, workers: int = 1) -> VerificationReport:
    """Check that no (n, n, x, x) donut exists for n <= limit."""
    return run_sweep("no-square-square-hole", _no_square_square_hole_range, limit, workers)
