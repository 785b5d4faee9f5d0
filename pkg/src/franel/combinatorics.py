"""Exact integer combinatorics: binomial coefficients and Franel numbers.

Everything here is closed over (arbitrary-precision) integers, except the
two rational helpers which use fractions.Fraction.  No floats anywhere.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

ROUTES = ("direct", "strehl", "recurrence", "sun-expansion")


class InconsistencyError(ArithmeticError):
    """An exact division that must be exact left a nonzero remainder."""


class BinomialProvider:
    """Binomial coefficients backed by cached Pascal rows.

    Rows are built on demand up to ``row_limit``; larger arguments fall
    through to a direct evaluation so an isolated huge query does not
    inflate the cache.  Out-of-range k returns 0 (vanishing-term
    convention used by every sum in this package).
    """

    def __init__(self, row_limit: int = 2048):
        self.row_limit = row_limit
        self._rows: list[list[int]] = [[1]]

    def __call__(self, n: int, k: int) -> int:
        if n < 0:
            raise ValueError(f"binomial: n must be nonnegative, got {n}")
        if k < 0 or k > n:
            return 0
        if n > self.row_limit:
            return math.comb(n, k)
        rows = self._rows
        while len(rows) <= n:
            prev = rows[-1]
            rows.append(
                [1] + [prev[i - 1] + prev[i] for i in range(1, len(prev))] + [1]
            )
        return rows[n][k]

    @property
    def cached_rows(self) -> int:
        return len(self._rows)


_DEFAULT_PROVIDER = BinomialProvider()


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0; zero for k outside [0, n]."""
    return _DEFAULT_PROVIDER(n, k)


def binomial_generalized(x: int, k: int) -> int:
    """C(x, k) = x(x-1)...(x-k+1)/k! for integer x of any sign, k >= 0."""
    if k < 0:
        raise ValueError(f"binomial_generalized: k must be nonnegative, got {k}")
    if x >= 0:
        return math.comb(x, k)
    # reflection: C(x, k) = (-1)^k C(k - x - 1, k)
    return (-1) ** k * math.comb(k - x - 1, k)


def franel_direct(n: int) -> int:
    """Sum of cubes of the n-th binomial row."""
    return sum(binomial(n, k) ** 3 for k in range(n + 1))


def franel_strehl(n: int) -> int:
    return sum(binomial(n, k) ** 2 * binomial(2 * k, n) for k in range(n + 1))


def franel_sun_expansion(n: int) -> int:
    """Alternating central-binomial expansion with (-4)^(n-k) weights."""
    total = 0
    for k in range(n + 1):
        total += (
            binomial(n + 2 * k, 3 * k)
            * binomial(3 * k, k)
            * binomial(2 * k, k)
            * (-4) ** (n - k)
        )
    return total


def _recurrence_extend(values: list[int], n_max: int) -> None:
    """Extend a Franel list in place up to index n_max via the three-term
    recurrence (n+1)^2 f_{n+1} = (7n^2+7n+2) f_n + 8 n^2 f_{n-1}."""
    while len(values) <= n_max:
        n = len(values) - 1
        num = (7 * n * n + 7 * n + 2) * values[n] + 8 * n * n * values[n - 1]
        q, r = divmod(num, (n + 1) * (n + 1))
        if r:
            raise InconsistencyError(
                f"franel recurrence: division by {(n + 1) ** 2} inexact at n={n + 1}"
            )
        values.append(q)


# shared grow-only table for the recurrence route (cheapest route; used as
# the workhorse by all sweeps)
_RECURRENCE_CACHE: list[int] = [1, 2]


def franel_upto(n_max: int) -> list[int]:
    """f_0..f_n_max by the recurrence route, from a shared cache."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    _recurrence_extend(_RECURRENCE_CACHE, n_max)
    return _RECURRENCE_CACHE[: n_max + 1]


_CENTRAL_CACHE: list[int] = [1]


def central_binomials_upto(k_max: int) -> list[int]:
    """[C(0,0), C(2,1), ..., C(2*k_max, k_max)] from a shared cache."""
    cache = _CENTRAL_CACHE
    while len(cache) <= k_max:
        k = len(cache) - 1
        # C(2k+2, k+1) = C(2k, k) * 2(2k+1)/(k+1); division is exact
        cache.append(cache[-1] * 2 * (2 * k + 1) // (k + 1))
    return cache[: k_max + 1]


def franel_recurrence(n: int) -> int:
    return franel_upto(n)[n]


_ROUTE_FN = {
    "direct": franel_direct,
    "strehl": franel_strehl,
    "recurrence": franel_recurrence,
    "sun-expansion": franel_sun_expansion,
}


def franel(n: int, route: str = "recurrence") -> int:
    """f_n by the selected route; all routes agree."""
    if n < 0:
        raise ValueError(f"franel: n must be nonnegative, got {n}")
    try:
        fn = _ROUTE_FN[route]
    except KeyError:
        raise ValueError(f"unknown route {route!r}; expected one of {ROUTES}") from None
    return fn(n)


@dataclass(frozen=True)
class FranelTable:
    """Immutable table of f_0..f_N plus the route that produced it."""

    values: tuple[int, ...]
    route: str

    def __post_init__(self):
        if self.route not in ROUTES:
            raise ValueError(f"unknown route {self.route!r}")
        if not self.values:
            raise ValueError("empty table")

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


def build_franel_table(n_max: int, route: str = "recurrence") -> FranelTable:
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    if route == "recurrence":
        values = tuple(franel_upto(n_max))
    else:
        values = tuple(franel(n, route) for n in range(n_max + 1))
    return FranelTable(values=values, route=route)


def macmahon_sides(n: int, x: int) -> tuple[int, int]:
    """Both sides of the cube-sum / central-trinomial expansion at integer x.

    Left: sum_k C(n,k)^3 x^k.
    Right: sum_k C(n+k,3k) C(3k,2k) C(2k,k) x^k (1+x)^(n-2k).
    Convention 0^0 = 1, so x = -1 with n = 2k still contributes.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    lhs = sum(binomial(n, k) ** 3 * x**k for k in range(n + 1))
    rhs = 0
    for k in range(n // 2 + 1):  # C(n+k,3k) = 0 for k > n/2
        rhs += (
            binomial(n + k, 3 * k)
            * binomial(3 * k, 2 * k)
            * binomial(2 * k, k)
            * x**k
            * (1 + x) ** (n - 2 * k)
        )
    return lhs, rhs


def partial_fraction_sides(n: int) -> tuple[Fraction, Fraction]:
    """Both sides of sum_k (-1)^k C(n,k)/(x+k) = n!/(x(x+1)...(x+n)) at x=1/2."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    half = Fraction(1, 2)
    lhs = sum(
        (-1) ** k * binomial(n, k) / (half + k) for k in range(n + 1)
    )
    den = Fraction(1)
    for j in range(n + 1):
        den *= half + j
    rhs = Fraction(math.factorial(n)) / den
    return lhs, rhs
