import pytest

from franel.combinatorics import binomial, franel_upto
from franel.congruences import (
    AUX_IDS,
    check_auxiliary,
    check_reduction_chain,
    check_theorem1,
    check_theorem2,
    check_theorem3,
    family_sum,
    _family_sum_noinc,
    final3_rhs_terms,
    inverse_weighted_sum_mod,
)
from franel.modular import NotCoprimeError, primes_in_range, rational_residue


def test_family_sum_matches_reference():
    for a, b, c in [(3, 1, -16), (9, 4, 5), (585, 58, -24304)]:
        for n in range(0, 40):
            assert family_sum(a, b, c, n) == _family_sum_noinc(a, b, c, n)


class TestTheorem1:
    def test_examples(self):
        r = check_theorem1(2)
        assert r.passed and r.witness == 0
        assert family_sum(3, 1, -16, 2) == -16 + 16 == 0
        r = check_theorem1(3)
        assert r.passed and r.witness == 7
        assert family_sum(3, 1, -16, 3) == 256 - 256 + 420 == 420
        assert check_theorem1(50).passed

    def test_bad_args(self):
        with pytest.raises(ValueError):
            check_theorem1(1)

    def test_sweep(self):
        for n in range(2, 120):
            r = check_theorem1(n)
            assert r.passed
            assert r.witness * n * binomial(2 * n, n) == family_sum(3, 1, -16, n)


class TestTheorem2:
    def test_p3_hand_checked(self):
        # lhs = 1 + 16*inv(11) + 420*inv(13) = 1 + 26 + 24 = 24 (mod 27)
        r = check_theorem2(3)
        assert r.passed and r.lhs == r.rhs == 24 and r.modulus == 27
        assert rational_residue(16, -16, 27).value == 26
        assert rational_residue(420, 256, 27).value == 24

    def test_p5(self):
        r = check_theorem2(5)
        assert r.passed and r.lhs == r.rhs == 5 and r.modulus == 125

    def test_large(self):
        assert check_theorem2(997).passed

    def test_oracle_modular_sum(self):
        # rebuild the sum with one rational_residue per term
        f = franel_upto(6)
        for p in (3, 5, 7):
            m = p**3
            total = 0
            for k in range(p):
                total += rational_residue(
                    (3 * k + 1) * binomial(2 * k, k) * f[k], (-16) ** k, m
                ).value
            assert total % m == check_theorem2(p).lhs

    def test_p2_not_coprime(self):
        with pytest.raises(NotCoprimeError):
            check_theorem2(2)

    def test_composite_rejected(self):
        with pytest.raises(ValueError):
            check_theorem2(9)


class TestTheorem3:
    def test_examples(self):
        for p in (3, 7, 19):
            assert check_theorem3(p).passed

    def test_rejects_1_mod_4(self):
        with pytest.raises(ValueError):
            check_theorem3(5)

    def test_sweep(self):
        for p in primes_in_range(3, 200):
            if p % 4 == 3:
                assert check_theorem3(p).passed


class TestAuxiliary:
    def test_babbage(self):
        (r,) = check_auxiliary("babbage", 5)
        assert r.passed and binomial(9, 4) == 126 and r.lhs == 126 % 25 == 1

    def test_morley(self):
        (r,) = check_auxiliary("morley", 5)
        assert r.passed and r.lhs == 6 and r.rhs == 256 % 125 == 6
        with pytest.raises(ValueError):
            check_auxiliary("morley", 3)

    def test_jarvis_verrill(self):
        reports = check_auxiliary("jarvis_verrill", 3)
        assert [r.verdict for r in reports] == ["pass"] * 3
        # f_0 = 1 = f_2 (mod 3); f_1 = 2 = -8 f_1 (mod 3)
        assert reports[0].lhs == reports[0].rhs == 1
        assert reports[1].lhs == reports[1].rhs == 2

    def test_multinomial(self):
        reports = {r.params["k"]: r for r in check_auxiliary("multinomial", 5)}
        assert 2 not in reports  # k = (p-1)/2 routed to half_binom
        r = reports[1]
        assert r.passed and r.lhs == 105 % 25 == 5
        with pytest.raises(ValueError):
            check_auxiliary("multinomial", 3)

    def test_half_binom(self):
        exact, mod = check_auxiliary("half_binom", 5)
        assert exact.passed and exact.lhs == -4536
        assert mod.passed and mod.lhs == -4536 % 25 == (-(16**4)) % 25 == 14

    def test_central_pmod(self):
        reports = {r.params["k"]: r for r in check_auxiliary("central_pmod", 5)}
        r = reports[2]
        assert r.passed and r.lhs == 6 * pow(16, -1, 5) % 5 == 1

    def test_fermat_square(self):
        (r,) = check_auxiliary("fermat_square", 3)
        assert r.passed and r.modulus == 9 and r.rhs == 1

    def test_final_reflect(self):
        for p in (3, 5, 7, 11, 13):
            assert all(r.passed for r in check_auxiliary("final_reflect", p))

    def test_unknown_id(self):
        with pytest.raises(ValueError):
            check_auxiliary("nonsense", 5)

    def test_all_ids_small_sweep(self):
        for p in primes_in_range(3, 60):
            for aux_id in AUX_IDS:
                if p == 3 and aux_id in ("morley", "multinomial"):
                    continue
                assert all(
                    r.passed for r in check_auxiliary(aux_id, p)
                ), (aux_id, p)


class TestReductionChain:
    def test_central_vanish_p5(self):
        reports = [
            r for r in check_reduction_chain(5)
            if r.statement == "chain_central_vanish"
        ]
        assert [r.params["k"] for r in reports] == [3, 4]
        assert reports[0].lhs == 20 % 5 == 0 and reports[1].lhs == 70 % 5 == 0

    def test_final3_p7_both_zero(self):
        (r,) = [
            r for r in check_reduction_chain(7) if r.statement == "chain_final3"
        ]
        assert r.passed and r.lhs == 0 and r.rhs == 0

    def test_final3_p13_nonzero_common_residue(self):
        (r,) = [
            r for r in check_reduction_chain(13) if r.statement == "chain_final3"
        ]
        assert r.passed and r.lhs != 0

    def test_pair_cancellation_is_exact(self):
        for p in (3, 7, 11, 19, 23):
            terms = final3_rhs_terms(p)
            half = (p - 1) // 2
            for k in range((half + 1) // 2):
                assert terms[k] + terms[half - k] == 0
            pair_reports = [
                r for r in check_reduction_chain(p)
                if r.statement == "chain_final3_pair"
            ]
            assert pair_reports and all(r.passed for r in pair_reports)

    def test_no_pair_reports_for_1_mod_4(self):
        assert not [
            r for r in check_reduction_chain(13)
            if r.statement == "chain_final3_pair"
        ]

    def test_full_chain_small_primes(self):
        for p in primes_in_range(3, 80):
            reports = check_reduction_chain(p)
            assert all(r.passed for r in reports), (
                p,
                [r.statement for r in reports if not r.passed],
            )


def test_inverse_weighted_sum_matches_theorem_reports():
    for p in (3, 5, 7, 11):
        m = p * p
        assert (
            inverse_weighted_sum_mod(p, m, [3 * k + 1 for k in range(p)])
            == check_theorem2(p).lhs % m
        )
