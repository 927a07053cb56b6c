"""Exact arithmetic in the unit circle with an absorbing zero adjoined.

A nonzero element is stored as a rational rotation p/q, meaning exp(2πi p/q),
reduced so that gcd(p, q) = 1 and 0 <= p < q. Every value a homomorphism from
a finite monoid can take is of this form, so no tolerances are ever needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


@dataclass(frozen=True)
class DotCircle:
    # q == 0 encodes Zero; otherwise the reduced rotation p/q
    p: int
    q: int

    @property
    def is_zero(self) -> bool:
        return self.q == 0

    def __mul__(self, other: "DotCircle") -> "DotCircle":
        return mul(self, other)

    def __pow__(self, k: int) -> "DotCircle":
        return pow_(self, k)

    def inverse(self) -> "DotCircle":
        return inv(self)

    def order(self) -> int | None:
        """Multiplicative order; None for Zero."""
        return None if self.is_zero else self.q

    def sort_key(self) -> tuple:
        return (0, Fraction(0)) if self.is_zero else (1, Fraction(self.p, self.q))

    def __lt__(self, other: "DotCircle") -> bool:
        return self.sort_key() < other.sort_key()

    def __le__(self, other: "DotCircle") -> bool:
        return self.sort_key() <= other.sort_key()

    def __str__(self) -> str:
        return "0" if self.is_zero else f"{self.p}/{self.q}"

    def __repr__(self) -> str:
        return "Zero" if self.is_zero else f"Turn({self.p}, {self.q})"

    def to_complex(self) -> complex:
        import cmath

        return 0j if self.is_zero else cmath.exp(2j * cmath.pi * self.p / self.q)


def Turn(p: int, q: int) -> DotCircle:
    if q <= 0:
        raise ValueError("rotation denominator must be positive")
    p %= q
    g = gcd(p, q)
    return DotCircle(p // g, q // g)


Zero = DotCircle(0, 0)
ONE = Turn(0, 1)


def mul(a: DotCircle, b: DotCircle) -> DotCircle:
    if a.q == 0 or b.q == 0:
        return Zero
    return Turn(a.p * b.q + b.p * a.q, a.q * b.q)


def inv(a: DotCircle) -> DotCircle:
    if a.q == 0:
        return Zero
    return Turn(-a.p, a.q)


def pow_(a: DotCircle, k: int) -> DotCircle:
    """a**k for k >= 0; the empty product is ONE, also for Zero."""
    if k < 0:
        raise ValueError("exponent must be nonnegative")
    if k == 0:
        return ONE
    if a.q == 0:
        return Zero
    return Turn(a.p * k, a.q)


def total_order(a: DotCircle, b: DotCircle) -> int:
    """Three-way comparison: Zero first, then rotations by increasing angle."""
    ka, kb = a.sort_key(), b.sort_key()
    return (ka > kb) - (ka < kb)


def parse(text: str) -> DotCircle:
    """Inverse of ``str``: "0" is Zero, "p/q" a rotation."""
    text = text.strip()
    if text == "0":
        return Zero
    num, sep, den = text.partition("/")
    if not sep:
        raise ValueError(f"not a circle value: {text!r}")
    p, q = int(num), int(den)
    z = Turn(p, q)
    if (z.p, z.q) != (p, q):
        raise ValueError(f"circle value {text!r} is not in reduced form")
    return z


def roots_of_unity(n: int) -> list[DotCircle]:
    return [Turn(k, n) for k in range(n)]
