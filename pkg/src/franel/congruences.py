"""Verification of the three divisibility/supercongruence theorems and the
auxiliary congruences their proofs route through.

Divisibility statements keep the exact big-integer sum and emit the quotient
as a witness; purely modular statements accumulate term by term at the
working modulus so the huge integers never materialize.
"""
from __future__ import annotations

from .combinatorics import binomial, central_binomials_upto, franel_upto
from .modular import is_prime, mod_inverse
from .reports import CongruenceReport


def _require_odd_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    # p = 2 is deliberately not rejected here: the -16 inverse below raises
    # NotCoprimeError for it, which is the contractual failure mode.


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def family_sum(a: int, b: int, c: int, n: int) -> int:
    """Exact S = sum_{k=0}^{n-1} (a*k + b) c^(n-k-1) C(2k,k) f_k."""
    f = franel_upto(max(n - 1, 0))
    cb = central_binomials_upto(max(n - 1, 0))
    total = 0
    power = c ** (n - 1) if n >= 1 else 0
    for k in range(n):
        total += (a * k + b) * power * cb[k] * f[k]
        if k < n - 1:
            power //= c
    return total


def _family_sum_noinc(a: int, b: int, c: int, n: int) -> int:
    # reference implementation without the running power (used in tests)
    f = franel_upto(max(n - 1, 0))
    cb = central_binomials_upto(max(n - 1, 0))
    return sum((a * k + b) * c ** (n - k - 1) * cb[k] * f[k] for k in range(n))


def inverse_weighted_sum_mod(p: int, m: int, weights: list[int] | None = None) -> int:
    """sum_{k=0}^{p-1} w(k) C(2k,k) f_k (-16)^(-k) mod m, w defaulting to 1.

    Raises NotCoprimeError when 16 is not invertible mod m.
    """
    f = franel_upto(p - 1)
    cb = central_binomials_upto(p - 1)
    inv16 = mod_inverse(-16 % m, m).value
    total = 0
    power = 1
    for k in range(p):
        w = weights[k] if weights is not None else 1
        total = (total + w * (cb[k] % m) * (f[k] % m) * power) % m
        power = power * inv16 % m
    return total


def check_theorem1(n: int) -> CongruenceReport:
    """Divisibility of the (3k+1)-weighted sum by n*C(2n,n), with witness."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    s = family_sum(3, 1, -16, n)
    modulus = n * binomial(2 * n, n)
    q, r = divmod(s, modulus)
    return CongruenceReport(
        statement="theorem1",
        params={"n": n},
        modulus=modulus,
        lhs=r,
        rhs=0,
        witness=q if r == 0 else None,
    )


def check_theorem2(p: int) -> CongruenceReport:
    """(3k+1)-weighted inverse sum against p*(-1)^((p-1)/2), mod p^3."""
    _require_odd_prime(p)
    m = p**3
    lhs = inverse_weighted_sum_mod(p, m, [3 * k + 1 for k in range(p)])
    rhs = p * (-1) ** ((p - 1) // 2) % m
    return CongruenceReport(
        statement="theorem2", params={"p": p}, modulus=m, lhs=lhs, rhs=rhs
    )


def check_theorem3(p: int) -> CongruenceReport:
    """Unweighted inverse sum vanishing mod p for p = 3 (mod 4)."""
    _require_prime(p)
    if p % 4 != 3:
        raise ValueError(f"need p = 3 (mod 4), got p={p}")
    lhs = inverse_weighted_sum_mod(p, p)
    return CongruenceReport(
        statement="theorem3", params={"p": p}, modulus=p, lhs=lhs, rhs=0
    )


# ---------------------------------------------------------------------------
# auxiliary congruences

AUX_IDS = (
    "babbage",
    "morley",
    "jarvis_verrill",
    "multinomial",
    "half_binom",
    "central_pmod",
    "fermat_square",
    "final_reflect",
)


def _aux_babbage(p: int) -> list[CongruenceReport]:
    m = p * p
    return [
        CongruenceReport(
            statement="babbage",
            params={"p": p},
            modulus=m,
            lhs=binomial(2 * p - 1, p - 1) % m,
            rhs=1,
        )
    ]


def _aux_morley(p: int) -> list[CongruenceReport]:
    if p <= 3:
        raise ValueError("morley requires p > 3")
    m = p**3
    return [
        CongruenceReport(
            statement="morley",
            params={"p": p},
            modulus=m,
            lhs=binomial(p - 1, (p - 1) // 2) % m,
            rhs=(-1) ** ((p - 1) // 2) * pow(4, p - 1, m) % m,
        )
    ]


def _aux_jarvis_verrill(p: int) -> list[CongruenceReport]:
    f = franel_upto(p - 1)
    out = []
    for n in range(p):
        out.append(
            CongruenceReport(
                statement="jarvis_verrill",
                params={"p": p, "n": n},
                modulus=p,
                lhs=f[n] % p,
                rhs=pow(-8 % p, n, p) * f[p - 1 - n] % p,
            )
        )
    return out


def _aux_multinomial(p: int) -> list[CongruenceReport]:
    """Two-branch reduction of (p+2k)!/((2k)! k! (p-k)!) mod p^2 for
    1 <= k < p, k != (p-1)/2."""
    if p <= 3:
        raise ValueError("multinomial requires p > 3")
    m = p * p
    half = (p - 1) // 2
    out = []
    for k in range(1, p):
        if k == half:
            continue  # handled by half_binom
        value = binomial(p + 2 * k, 3 * k) * binomial(3 * k, k) % m
        scale = p if k < half else 2 * p
        target = (-1) ** (k - 1) * scale * mod_inverse(k, m).value % m
        out.append(
            CongruenceReport(
                statement="multinomial",
                params={"p": p, "k": k, "branch": "low" if k < half else "high"},
                modulus=m,
                lhs=value,
                rhs=target,
            )
        )
    return out


def _aux_half_binom(p: int) -> list[CongruenceReport]:
    """The k=(p-1)/2 term: exact product shape, then its value mod p^2."""
    m = p * p
    k = (p - 1) // 2
    num = (
        binomial(p + 2 * k, 3 * k)
        * binomial(3 * k, k)
        * binomial(2 * k, k)
        * (k - p)
    )
    term, r = divmod(num, 2 * k + 1)
    assert r == 0, "k=(p-1)/2 term is not an integer"
    closed = -binomial(2 * p - 1, p - 1) * binomial(p - 1, k) ** 2
    return [
        CongruenceReport(
            statement="half_binom",
            params={"p": p, "part": "exact"},
            modulus=None,
            lhs=term,
            rhs=closed,
        ),
        CongruenceReport(
            statement="half_binom",
            params={"p": p, "part": "mod"},
            modulus=m,
            lhs=term % m,
            rhs=-pow(16, p - 1, m) % m,
        ),
    ]


def _aux_central_pmod(p: int) -> list[CongruenceReport]:
    half = (p - 1) // 2
    inv4 = mod_inverse(4, p).value
    out = []
    power = 1
    cb = central_binomials_upto(p - 1)
    for k in range(p):
        out.append(
            CongruenceReport(
                statement="central_pmod",
                params={"p": p, "k": k},
                modulus=p,
                lhs=cb[k] * power % p,
                rhs=(-1) ** k * binomial(half, k) % p,
            )
        )
        power = power * inv4 % p
    return out


def _aux_fermat_square(p: int) -> list[CongruenceReport]:
    m = p * p
    inv8 = mod_inverse(8, m).value
    inv4 = mod_inverse(4, m).value
    lhs = (pow(2, p - 1, m) + pow(inv8, p - 1, m) - pow(inv4, p - 1, m)) % m
    return [
        CongruenceReport(
            statement="fermat_square", params={"p": p}, modulus=m, lhs=lhs, rhs=1
        )
    ]


def _aux_final_reflect(p: int) -> list[CongruenceReport]:
    half = (p - 1) // 2
    out = []
    for k in range(half + 1):
        out.append(
            CongruenceReport(
                statement="final_reflect",
                params={"p": p, "k": k},
                modulus=p,
                lhs=binomial(2 * k, half - k) % p,
                rhs=(-1) ** (half - k) * binomial(3 * half - 3 * k, half - k) % p,
            )
        )
    return out


_AUX_FN = {
    "babbage": _aux_babbage,
    "morley": _aux_morley,
    "jarvis_verrill": _aux_jarvis_verrill,
    "multinomial": _aux_multinomial,
    "half_binom": _aux_half_binom,
    "central_pmod": _aux_central_pmod,
    "fermat_square": _aux_fermat_square,
    "final_reflect": _aux_final_reflect,
}


def check_auxiliary(aux_id: str, p: int) -> list[CongruenceReport]:
    if aux_id not in _AUX_FN:
        raise ValueError(f"unknown auxiliary id {aux_id!r}; expected one of {AUX_IDS}")
    _require_odd_prime(p)
    if p == 2:
        raise ValueError("p must be odd")
    return _AUX_FN[aux_id](p)


# ---------------------------------------------------------------------------
# intermediate reduction chain of the two supercongruence proofs


def final3_rhs_terms(p: int) -> list[int]:
    """Exact terms of the reflected half-range sum equivalent (mod p) to the
    unweighted inverse sum."""
    half = (p - 1) // 2
    return [
        (-1) ** k
        * binomial(half, k)
        * binomial(3 * k, k)
        * binomial(3 * half - 3 * k, half - k)
        for k in range(half + 1)
    ]


def check_reduction_chain(p: int) -> list[CongruenceReport]:
    """Every displayed intermediate congruence of the two proofs, verified
    numerically and independently (no elided steps reconstructed)."""
    _require_odd_prime(p)
    if p == 2:
        raise ValueError("p must be odd")
    m2 = p * p
    m3 = p**3
    half = (p - 1) // 2
    reports: list[CongruenceReport] = []

    # exact pulled-out form: S = -p C(2p-1,p-1) * [4^(p-1) * inner-sum]
    s_exact = family_sum(3, 1, -16, p)
    inner = 0
    cb = central_binomials_upto(p - 1)
    for k in range(p):
        gk = binomial(3 * k, k) - 2 * binomial(3 * k, k - 1)  # C(3k,k)/(2k+1)
        inner += (
            binomial(p + 2 * k, 3 * k)
            * gk
            * cb[k]
            * (k - p)
            * (-1) ** k
            * 4 ** (p - 1 - k)
        )
    reports.append(
        CongruenceReport(
            statement="chain_newsum_pp",
            params={"p": p},
            modulus=None,
            lhs=s_exact,
            rhs=-p * binomial(2 * p - 1, p - 1) * inner,
        )
    )

    # L = (1/p) * sum (3k+1) C(2k,k) f_k (-16)^(-k), taken mod p^2
    r3 = inverse_weighted_sum_mod(p, m3, [3 * k + 1 for k in range(p)])
    assert r3 % p == 0, "weighted inverse sum is not divisible by p"
    big_l = r3 // p % m2

    inv4 = mod_inverse(4, m2).value
    inv4_pow = pow(inv4, p - 1, m2)  # 4^(1-p)
    neg4_half = pow(-4 % m2, half, m2)

    line1 = (p * inv4_pow + neg4_half) % m2
    acc = 0
    for k in range(1, half):  # 1 <= k <= (p-3)/2
        num = (p - p * p * mod_inverse(k, m2).value) % m2
        den_inv = mod_inverse((2 * k + 1) * pow(4, k, m2), m2).value
        acc = (acc + cb[k] % m2 * num * den_inv) % m2
    line1 = (line1 + inv4_pow * acc) % m2
    reports.append(
        CongruenceReport(
            statement="chain_newsum2_line1",
            params={"p": p},
            modulus=m2,
            lhs=big_l,
            rhs=line1,
        )
    )

    acc = 0
    for k in range(half):  # 0 <= k <= (p-3)/2
        den_inv = mod_inverse((2 * k + 1) * pow(4, k, m2), m2).value
        acc = (acc + cb[k] % m2 * p * den_inv) % m2
    line2 = (neg4_half + inv4_pow * acc) % m2
    reports.append(
        CongruenceReport(
            statement="chain_newsum2_line2",
            params={"p": p},
            modulus=m2,
            lhs=big_l,
            rhs=line2,
        )
    )

    acc = 0
    for k in range(half):
        acc = (
            acc
            + (-1) ** k * binomial(half, k) * p * mod_inverse(2 * k + 1, m2).value
        ) % m2
    line3 = (neg4_half + inv4_pow * acc) % m2
    reports.append(
        CongruenceReport(
            statement="chain_newsum3",
            params={"p": p},
            modulus=m2,
            lhs=big_l,
            rhs=line3,
        )
    )

    # unweighted inverse sum against the reflected half-range form, mod p
    terms = final3_rhs_terms(p)
    reports.append(
        CongruenceReport(
            statement="chain_final3",
            params={"p": p},
            modulus=p,
            lhs=inverse_weighted_sum_mod(p, p),
            rhs=sum(terms) % p,
        )
    )

    # central binomials vanish mod p on the upper half range
    for k in range(half + 1, p):
        reports.append(
            CongruenceReport(
                statement="chain_central_vanish",
                params={"p": p, "k": k},
                modulus=p,
                lhs=cb[k] % p,
                rhs=0,
            )
        )

    # for p = 3 (mod 4) the reflected sum cancels in pairs, exactly
    if p % 4 == 3:
        for k in range((half + 1) // 2):
            reports.append(
                CongruenceReport(
                    statement="chain_final3_pair",
                    params={"p": p, "k": k},
                    modulus=None,
                    lhs=terms[k] + terms[half - k],
                    rhs=0,
                )
            )
    return reports
