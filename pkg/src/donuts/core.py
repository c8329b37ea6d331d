"""Donut configurations: the validity predicate, twisting, coprimality and scaling.

A configuration ``(a, b, x, y)`` is an ``a x b`` exterior rectangle with an
``x x y`` hole, ``x`` parallel to ``a``.  It is a donut when

    1 < b <= a < a*b,   a*b == 2*x*y,   1 <= x < a,   1 <= y < b.

Orientation is never silently repaired: ``validate`` reports ``(3, 4, ...)``
as violating ``b <= a``.  Only ``scale`` canonicalizes its output.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from donuts.arith import checked_mul

# Constraint identifiers reported by ``validate``.
B_GT_1 = "1 < b"
B_LE_A = "b <= a"
A_LT_D = "a < ab"
AREA = "ab = 2xy"
X_LT_A = "x < a"
Y_LT_B = "y < b"

CONSTRAINTS = (B_GT_1, B_LE_A, A_LT_D, AREA, X_LT_A, Y_LT_B)


class InvalidDonutError(ValueError):
    """Raised when a quadruple that must be a donut is not one."""

    def __init__(self, quad: tuple[int, int, int, int], violations: list[str]):
        self.quad = quad
        self.violations = violations
        super().__init__(f"{quad} is not a donut: violates {', '.join(violations)}")


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    violations: list[str] = field(default_factory=list)


def _require_positive(**args: int) -> None:
    for name, v in args.items():
        if isinstance(v, bool) or not isinstance(v, int):
            raise TypeError(f"{name} must be an int, got {type(v).__name__}")
        if v < 1:
            raise ValueError(f"{name} must be >= 1, got {v}")


def validate(a: int, b: int, x: int, y: int) -> ValidationReport:
    """Check every defining constraint of a donut and name each one that fails."""
    _require_positive(a=a, b=b, x=x, y=y)
    failed = []
    if not b > 1:
        failed.append(B_GT_1)
    if not b <= a:
        failed.append(B_LE_A)
    if not a < a * b:
        failed.append(A_LT_D)
    if a * b != 2 * x * y:
        failed.append(AREA)
    if not x < a:
        failed.append(X_LT_A)
    if not y < b:
        failed.append(Y_LT_B)
    return ValidationReport(valid=not failed, violations=failed)


def is_donut(a: int, b: int, x: int, y: int) -> bool:
    return validate(a, b, x, y).valid


@dataclass(frozen=True, order=True)
class DonutConfig:
    """A valid donut ``(a, b, x, y)``; construction raises InvalidDonutError otherwise."""

    a: int
    b: int
    x: int
    y: int

    def __post_init__(self) -> None:
        report = validate(self.a, self.b, self.x, self.y)
        if not report.valid:
            raise InvalidDonutError(self.as_tuple(), report.violations)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.x, self.y)

    @property
    def area(self) -> int:
        return area(self)

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.x},{self.y})"


def area(d: DonutConfig) -> int:
    return checked_mul(d.a, d.b)


def twist(d: DonutConfig) -> tuple[int, int, int, int]:
    """Rotate the hole by 90 degrees. The result is a raw quadruple and may be invalid."""
    return (d.a, d.b, d.y, d.x)


def is_twistable_definitional(d: DonutConfig) -> bool:
    return validate(*twist(d)).valid


def is_twistable_fast(d: DonutConfig) -> bool:
    """Closed form: a donut's hole can be twisted iff both hole sides exceed half of ``a``."""
    return 2 * d.x > d.a and 2 * d.y > d.a


def is_coprime_config(d: DonutConfig) -> bool:
    return gcd(d.a, d.x) == 1 and gcd(d.b, d.y) == 1


def canonical(a: int, b: int, x: int, y: int) -> tuple[int, int, int, int]:
    """Put the longer exterior side first, carrying the hole sides along."""
    if b > a:
        return (b, a, y, x)
    return (a, b, x, y)


def scale(d: DonutConfig, h: int, k: int) -> DonutConfig:
    """Return ``(h*a, k*b, h*x, k*y)``, reoriented so the longer exterior side comes first."""
    _require_positive(h=h, k=k)
    quad = (checked_mul(h, d.a), checked_mul(k, d.b), checked_mul(h, d.x), checked_mul(k, d.y))
    checked_mul(quad[0], quad[1])
    return DonutConfig(*canonical(*quad))
