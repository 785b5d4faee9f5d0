"""Numeric verification of the conjectured congruence families.

Everything here is checked, never proved: divisibility families with their
quotient witnesses, the two-square case split mod p^2, the multi-index
product congruences mod n^2, and the strengthened alternating forms.
"""
from __future__ import annotations

from dataclasses import dataclass

from .combinatorics import (
    binomial,
    binomial_generalized,
    central_binomials_upto,
    franel_upto,
)
from .congruences import family_sum, inverse_weighted_sum_mod
from .modular import is_prime, legendre_symbol, two_squares_decompose
from .reports import CongruenceReport


@dataclass(frozen=True)
class FamilyTriple:
    """Weights of one divisibility family: sum weight a*k+b, base c."""

    a: int
    b: int
    c: int


# the two published lists of triples; anything else is "extra-paper"
NEW1_TRIPLES = (
    FamilyTriple(9, 4, 5),
    FamilyTriple(5, 2, 16),
    FamilyTriple(9, 2, 50),
    FamilyTriple(5, 1, 96),
    FamilyTriple(6, 1, 320),
    FamilyTriple(90, 13, 896),
    FamilyTriple(102, 11, 10400),
)
NEW2_TRIPLES = (
    FamilyTriple(15, 4, -49),
    FamilyTriple(9, 2, -112),
    FamilyTriple(99, 17, -400),
    FamilyTriple(855, 109, -2704),
    FamilyTriple(585, 58, -24304),
)


@dataclass(frozen=True)
class MultiIndexSpec:
    """Multi-index configuration: m factors with integer multipliers a_i."""

    m: int
    a_list: tuple[int, ...]

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be positive")
        if len(self.a_list) != self.m:
            raise ValueError(
                f"a_list has {len(self.a_list)} entries, expected m={self.m}"
            )


def check_conjecture1(p: int) -> CongruenceReport:
    """(3k+1)-weighted inverse sum against p*(-1)^((p-1)/2), mod p^2."""
    if not is_prime(p) or p <= 3:
        raise ValueError(f"need a prime p > 3, got {p}")
    m = p * p
    lhs = inverse_weighted_sum_mod(p, m, [3 * k + 1 for k in range(p)])
    rhs = p * (-1) ** ((p - 1) // 2) % m
    return CongruenceReport(
        statement="conjecture1", params={"p": p}, modulus=m, lhs=lhs, rhs=rhs
    )


def conjecture2_target(p: int) -> tuple[int, str]:
    """The case target for the unweighted inverse sum mod p^2, plus the name
    of the case that fired."""
    m = p * p
    if p % 4 == 3:
        return 0, "3mod4"
    ts = two_squares_decompose(p)
    x, y = ts.x, ts.y
    if p % 12 == 1:
        y_div = y % 6 == 0
        x_div = (x - 3) % 6 == 0
        if y_div == x_div:
            raise AssertionError(
                f"p={p}: expected exactly one of 6|y and 6|x-3, got both/neither"
            )
        if y_div:
            return (4 * x * x - 2 * p) % m, "1mod12_y"
        return (2 * p - 4 * x * x) % m, "1mod12_x"
    # p = 5 (mod 12); 3 never divides xy here (x^2+y^2 = 2 mod 3 forces both
    # nonzero mod 3), checked rather than assumed
    if (x * y) % 3 == 0:
        raise AssertionError(f"p={p}: 3 | xy in the 5 mod 12 case")
    return 4 * legendre_symbol(x * y, 3) * x * y % m, "5mod12"


def check_conjecture2(p: int) -> CongruenceReport:
    if not is_prime(p) or p == 2:
        raise ValueError(f"need an odd prime, got {p}")
    m = p * p
    lhs = inverse_weighted_sum_mod(p, m)
    target, case = conjecture2_target(p)
    return CongruenceReport(
        statement="conjecture2",
        params={"p": p, "case": case},
        modulus=m,
        lhs=lhs,
        rhs=target,
    )


def check_family(t: FamilyTriple, n: int) -> CongruenceReport:
    """Divisibility of the (a*k+b, c)-weighted sum by n*C(2n,n)."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    extra = t not in NEW1_TRIPLES and t not in NEW2_TRIPLES
    s = family_sum(t.a, t.b, t.c, n)
    modulus = n * binomial(2 * n, n)
    q, r = divmod(s, modulus)
    params = {"a": t.a, "b": t.b, "c": t.c, "n": n}
    if extra:
        params["origin"] = "extra-paper"
    return CongruenceReport(
        statement="family",
        params=params,
        modulus=modulus,
        lhs=r,
        rhs=0,
        witness=q if r == 0 else None,
    )


def product_factor_columns(a: int, n: int, modulus: int) -> list[int]:
    """[C(a*n-1, k) * C(a*n+k, k) mod modulus for k in 0..n-1]."""
    return [
        binomial_generalized(a * n - 1, k)
        * binomial_generalized(a * n + k, k)
        % modulus
        for k in range(n)
    ]


def check_third_conjecture(
    s: MultiIndexSpec, n: int, variant: str = "linear"
) -> CongruenceReport:
    """Multi-index product sum vanishing mod n^2.

    linear uses weight 3k+2, quadratic uses 9k^2+5k.  Zero multipliers are
    admitted (the factor degenerates to (-1)^k) and flagged in the report.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if variant not in ("linear", "quadratic"):
        raise ValueError(f"unknown variant {variant!r}")
    m = n * n
    if m == 1:
        # modulus 1: trivially zero, no residue arithmetic needed
        lhs = 0
    else:
        f = franel_upto(n - 1)
        cols = [product_factor_columns(a, n, m) for a in s.a_list]
        sign = (-1) ** (s.m - 1)
        total = 0
        sgn = 1
        for k in range(n):
            w = 3 * k + 2 if variant == "linear" else 9 * k * k + 5 * k
            prod = w * sgn * (f[k] % m) % m
            for col in cols:
                prod = prod * col[k] % m
            total = (total + prod) % m
            sgn *= sign
        lhs = total
    params = {"m": s.m, "a": list(s.a_list), "n": n, "variant": variant}
    if 0 in s.a_list:
        params["degenerate"] = True
    return CongruenceReport(
        statement=f"third_{variant}", params=params, modulus=max(m, 1), lhs=lhs, rhs=0
    )


def _grid_report(
    variant: str, m: int, tup: tuple[int, ...], n: int, lhs: int, modulus: int
) -> CongruenceReport:
    params = {"m": m, "a": list(tup), "n": n, "variant": variant}
    if 0 in tup:
        params["degenerate"] = True
    return CongruenceReport(
        statement=f"third_{variant}", params=params, modulus=modulus, lhs=lhs, rhs=0
    )


def third_conjecture_grid(
    n: int, m_max: int = 3, a_values: tuple[int, ...] = (-3, -2, -1, 0, 1, 2, 3)
) -> list[CongruenceReport]:
    """Both weight variants over every multiplier tuple of length <= m_max.

    Equivalent to calling check_third_conjecture per (tuple, variant) but
    shares the per-multiplier factor columns across tuples.
    """
    from itertools import product as iproduct

    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    out: list[CongruenceReport] = []
    if n == 1:
        for m in range(1, m_max + 1):
            for tup in iproduct(a_values, repeat=m):
                for variant in ("linear", "quadratic"):
                    out.append(_grid_report(variant, m, tup, n, 0, 1))
        return out
    m2 = n * n
    f = franel_upto(n - 1)
    cols1 = {a: product_factor_columns(a, n, m2) for a in a_values}
    # weight-and-franel columns; the _alt variants carry the (-1)^k that
    # appears for even tuple length
    w_lin = [(3 * k + 2) * f[k] % m2 for k in range(n)]
    w_quad = [(9 * k * k + 5 * k) * f[k] % m2 for k in range(n)]
    w_lin_alt = [w if k % 2 == 0 else -w % m2 for k, w in enumerate(w_lin)]
    w_quad_alt = [w if k % 2 == 0 else -w % m2 for k, w in enumerate(w_quad)]

    def emit(m: int, tup: tuple[int, ...], col: list[int]) -> None:
        wl = w_lin if m % 2 == 1 else w_lin_alt
        wq = w_quad if m % 2 == 1 else w_quad_alt
        s_lin = s_quad = 0
        for k in range(n):
            ck = col[k]
            s_lin += wl[k] * ck
            s_quad += wq[k] * ck
        out.append(_grid_report("linear", m, tup, n, s_lin % m2, m2))
        out.append(_grid_report("quadratic", m, tup, n, s_quad % m2, m2))

    def combine(c1: list[int], c2: list[int]) -> list[int]:
        return [x * y % m2 for x, y in zip(c1, c2)]

    prev: dict[tuple[int, ...], list[int]] = {(): [1] * n}
    for m in range(1, m_max + 1):
        cur: dict[tuple[int, ...], list[int]] = {}
        for tup, col in prev.items():
            for a in a_values:
                new = combine(col, cols1[a])
                cur[tup + (a,)] = new
                emit(m, tup + (a,), new)
        prev = cur
    return out


def check_product_note(p: int, a: int, k: int) -> CongruenceReport:
    """C(a*p-1, k) * C(a*p+k, k) = (-1)^k mod p^2 for 0 <= k <= p-1."""
    if not is_prime(p) or p == 2:
        raise ValueError(f"need an odd prime, got {p}")
    if not 0 <= k <= p - 1:
        raise ValueError(f"need 0 <= k <= p-1, got k={k}")
    m = p * p
    lhs = (
        binomial_generalized(a * p - 1, k)
        * binomial_generalized(a * p + k, k)
        % m
    )
    return CongruenceReport(
        statement="product_note",
        params={"p": p, "a": a, "k": k},
        modulus=m,
        lhs=lhs,
        rhs=(-1) ** k % m,
    )


def check_zw_sun(n: int, variant: str = "guo") -> CongruenceReport:
    """Alternating Franel sums: guo is (3k+2) mod 2n^2; strengthened is
    (9k^2+5k) mod n^2(n-1)."""
    if variant == "guo":
        if n < 1:
            raise ValueError(f"need n >= 1, got {n}")
        modulus = 2 * n * n
        weight = lambda k: 3 * k + 2
    elif variant == "strengthened":
        if n < 2:
            raise ValueError(f"need n >= 2, got {n}")
        modulus = n * n * (n - 1)
        weight = lambda k: 9 * k * k + 5 * k
    else:
        raise ValueError(f"unknown variant {variant!r}")
    f = franel_upto(n - 1)
    s = sum(weight(k) * (-1) ** k * f[k] for k in range(n))
    q, r = divmod(s, modulus)
    return CongruenceReport(
        statement=f"zw_{variant}",
        params={"n": n},
        modulus=modulus,
        lhs=r,
        rhs=0,
        witness=q if r == 0 else None,
    )
