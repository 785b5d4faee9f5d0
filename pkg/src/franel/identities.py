"""Exact verification of the binomial identities the congruence proofs use.

Identities with rational factors are compared after cross-multiplication,
so every check is a pure integer equality and a failure is exact.
"""
from __future__ import annotations

from .combinatorics import (
    binomial,
    franel_direct,
    franel_recurrence,
    franel_strehl,
    franel_sun_expansion,
    franel_upto,
    macmahon_sides,
    partial_fraction_sides,
)
from .reports import IdentityReport


def check_sun_expansion(n: int) -> IdentityReport:
    """f_n against the alternating central-binomial expansion."""
    return IdentityReport(
        statement="sun_expansion",
        params={"n": n},
        lhs=franel_sun_expansion(n),
        rhs=franel_direct(n),
    )


def check_strehl(n: int) -> IdentityReport:
    return IdentityReport(
        statement="strehl",
        params={"n": n},
        lhs=franel_strehl(n),
        rhs=franel_direct(n),
    )


def check_macmahon(n: int, x: int) -> IdentityReport:
    lhs, rhs = macmahon_sides(n, x)
    return IdentityReport(
        statement="macmahon", params={"n": n, "x": x}, lhs=lhs, rhs=rhs
    )


def check_partial_fraction(n: int) -> IdentityReport:
    """Both sides are exact rationals; compare numerators over the common
    denominator so the report stays integer-valued."""
    lhs, rhs = partial_fraction_sides(n)
    den = lhs.denominator * rhs.denominator // _gcd(lhs.denominator, rhs.denominator)
    return IdentityReport(
        statement="partial_fraction",
        params={"n": n},
        lhs=lhs.numerator * (den // lhs.denominator),
        rhs=rhs.numerator * (den // rhs.denominator),
    )


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def induction_lhs(n: int, k: int) -> int:
    """The raw weighted sum on the left of the induction identity."""
    total = 0
    for m in range(k, n):
        total += (
            (3 * m + 1)
            * (-16) ** (n - m - 1)
            * binomial(2 * m, m)
            * binomial(m + 2 * k, 3 * k)
            * (-4) ** (m - k)
        )
    return total


def check_induction_identity(n: int, k: int) -> IdentityReport:
    """Weighted partial-sum identity, compared after cross-multiplying
    by 8(2k+1) so both sides are integers."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    lhs = 8 * (2 * k + 1) * induction_lhs(n, k)
    rhs = (
        binomial(2 * n, n)
        * binomial(n + 2 * k, 3 * k)
        * n
        * (k - n)
        * (-4) ** (n - k)
    )
    return IdentityReport(
        statement="induction", params={"n": n, "k": k}, lhs=lhs, rhs=rhs
    )


def check_summation_lemma(n: int, k: int) -> IdentityReport:
    """Alternating sum telescoping to a single (possibly zero) binomial."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    lhs = sum(
        binomial(n, m) * binomial(m + 2 * k, 3 * k) * (-1) ** (m - k)
        for m in range(k, n + 1)
    )
    rhs = binomial(2 * k, n - k) * (-1) ** (n - k)
    return IdentityReport(
        statement="summation_lemma", params={"n": n, "k": k}, lhs=lhs, rhs=rhs
    )


def check_integrality(n: int) -> IdentityReport:
    """Integrality facts used to pull the n*C(2n,n) factor out of the main
    divisibility sum.  For each 0 <= k < n:

      (a) C(3k,k)/(2k+1) is an integer, equal to C(3k,k) - 2 C(3k,k-1);
      (b) C(2k,k) * (-4)^(n-k) / 8 is an integer (n >= 2);
      (c) the full pulled-out sum is an integer (exact division check).

    On failure the report carries the first failing k in its params.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    for k in range(n):
        c3k = binomial(3 * k, k)
        q, r = divmod(c3k, 2 * k + 1)
        alt = c3k - 2 * binomial(3 * k, k - 1)
        if r != 0 or q != alt:
            return IdentityReport(
                statement="integrality", params={"n": n, "k": k, "part": "a"},
                lhs=q if r == 0 else c3k, rhs=alt if r == 0 else q * (2 * k + 1),
            )
        num = binomial(2 * k, k) * (-4) ** (n - k)
        if num % 8:
            return IdentityReport(
                statement="integrality", params={"n": n, "k": k, "part": "b"},
                lhs=num % 8, rhs=0,
            )
    # (c): sum_k C(n+2k,3k) C(3k,k) C(2k,k) (k-n) (-4)^(n-k) / (8(2k+1))
    num = 0
    den = 8
    for k in range(n):
        term = (
            binomial(n + 2 * k, 3 * k)
            * (binomial(3 * k, k) - 2 * binomial(3 * k, k - 1))  # C(3k,k)/(2k+1)
            * binomial(2 * k, k)
            * (k - n)
            * (-4) ** (n - k)
        )
        num += term
    q, r = divmod(num, den)
    return IdentityReport(
        statement="integrality", params={"n": n, "part": "c"}, lhs=r, rhs=0
    )


def check_recurrence_step(n: int) -> IdentityReport:
    """One step of the three-term recurrence, against direct-route values."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    f = [franel_direct(n - 1), franel_direct(n), franel_direct(n + 1)]
    lhs = (n + 1) * (n + 1) * f[2]
    rhs = (7 * n * n + 7 * n + 2) * f[1] + 8 * n * n * f[0]
    return IdentityReport(
        statement="recurrence", params={"n": n}, lhs=lhs, rhs=rhs
    )


def check_recurrence(n_max: int) -> IdentityReport:
    """Recurrence over the whole table 1 <= n <= n_max - 1; reports the
    first failing step, or an aggregate pass."""
    if n_max < 2:
        raise ValueError(f"need n_max >= 2, got {n_max}")
    f = [franel_direct(n) for n in range(n_max + 1)]
    for n in range(1, n_max):
        lhs = (n + 1) * (n + 1) * f[n + 1]
        rhs = (7 * n * n + 7 * n + 2) * f[n] + 8 * n * n * f[n - 1]
        if lhs != rhs:
            return IdentityReport(
                statement="recurrence", params={"n_max": n_max, "n": n},
                lhs=lhs, rhs=rhs,
            )
    return IdentityReport(
        statement="recurrence", params={"n_max": n_max}, lhs=0, rhs=0
    )


def check_route_agreement(n: int) -> list[IdentityReport]:
    """All four Franel routes against the direct route at one index."""
    ref = franel_direct(n)
    out = []
    for route, fn in (
        ("strehl", franel_strehl),
        ("recurrence", franel_recurrence),
        ("sun-expansion", franel_sun_expansion),
    ):
        out.append(
            IdentityReport(
                statement="route_agreement",
                params={"n": n, "route": route},
                lhs=fn(n),
                rhs=ref,
            )
        )
    return out
