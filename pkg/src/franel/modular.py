"""Canonical modular arithmetic, primes, Legendre symbols, two squares."""
from __future__ import annotations

import math
from dataclasses import dataclass


class NotCoprimeError(ValueError):
    """Requested inverse of a residue that shares a factor with the modulus."""


@dataclass(frozen=True)
class Residue:
    """A canonical residue class: 0 <= value < modulus, modulus >= 2.

    Arithmetic between residues of different moduli is rejected; mixing
    mod p with mod p^2/p^3 silently is the main hazard in this domain.
    """

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")
        if not 0 <= self.value < self.modulus:
            raise ValueError(f"value {self.value} not canonical mod {self.modulus}")

    def _check(self, other: "Residue") -> None:
        if self.modulus != other.modulus:
            raise ValueError(
                f"modulus mismatch: {self.modulus} vs {other.modulus}"
            )

    def __add__(self, other: "Residue") -> "Residue":
        self._check(other)
        return Residue((self.value + other.value) % self.modulus, self.modulus)

    def __sub__(self, other: "Residue") -> "Residue":
        self._check(other)
        return Residue((self.value - other.value) % self.modulus, self.modulus)

    def __mul__(self, other: "Residue") -> "Residue":
        self._check(other)
        return Residue((self.value * other.value) % self.modulus, self.modulus)

    def __neg__(self) -> "Residue":
        return Residue(-self.value % self.modulus, self.modulus)

    def __pow__(self, e: int) -> "Residue":
        if e < 0:
            return mod_inverse(self.value, self.modulus) ** (-e)
        return Residue(pow(self.value, e, self.modulus), self.modulus)


def reduce(a: int, m: int) -> Residue:
    """Canonical representative of a mod m (correct for negative a)."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    return Residue(a % m, m)


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b)."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def mod_inverse(a: int, m: int) -> Residue:
    """Residue r with a*r == 1 (mod m), by the extended Euclidean algorithm."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    a %= m
    g, x, _ = xgcd(a, m)
    if g != 1:
        raise NotCoprimeError(f"{a} is not invertible mod {m} (gcd={g})")
    return Residue(x % m, m)


def rational_residue(num: int, den: int, m: int) -> Residue:
    """The residue of num/den mod m; den must be coprime to m."""
    return reduce(num * mod_inverse(den, m).value, m)


def is_prime(n: int) -> bool:
    """Deterministic trial division; intended for desk-scale n (< 10^7)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    d = 5
    while d * d <= n:
        if n % d == 0 or n % (d + 2) == 0:
            return False
        d += 6
    return True


def primes_in_range(lo: int, hi: int) -> list[int]:
    """All primes in [lo, hi], ascending."""
    if lo < 2:
        raise ValueError(f"lo must be >= 2, got {lo}")
    if lo > hi:
        raise ValueError(f"empty interval bounds reversed: [{lo}, {hi}]")
    return [n for n in range(lo, hi + 1) if is_prime(n)]


def legendre_symbol(a: int, p: int) -> int:
    """Euler's criterion: 1 for a nonzero square mod p, -1 for a nonsquare,
    0 when p divides a.  p must be an odd prime."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    e = pow(a % p, (p - 1) // 2, p)
    return -1 if e == p - 1 else e


@dataclass(frozen=True)
class TwoSquares:
    """Normalized decomposition p = x^2 + y^2 with x odd > 0, y even > 0."""

    p: int
    x: int
    y: int

    def __post_init__(self):
        if self.x * self.x + self.y * self.y != self.p:
            raise ValueError("x^2 + y^2 != p")
        if self.x <= 0 or self.x % 2 == 0:
            raise ValueError("x must be positive and odd")
        if self.y <= 0 or self.y % 2 == 1:
            raise ValueError("y must be positive and even")


def two_squares_decompose(p: int) -> TwoSquares:
    """The unique normalized two-square decomposition of a prime p = 1 mod 4,
    by exhaustive search over odd x <= sqrt(p)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p % 4 != 1:
        raise ValueError(f"{p} != 1 (mod 4): no two-square decomposition")
    for x in range(1, math.isqrt(p) + 1, 2):
        y2 = p - x * x
        y = math.isqrt(y2)
        if y * y == y2:
            return TwoSquares(p=p, x=x, y=y)
    raise AssertionError(f"no decomposition found for prime {p} = 1 (mod 4)")
