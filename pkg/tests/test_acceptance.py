"""Acceptance suite: every top-level verification claim at its stated
range and tolerance (all checks are exact, so "tolerance" means equality),
one test per criterion, each printing a pass/fail line.

Run with `pytest -v tests/test_acceptance.py` (add -s to see the lines).
"""
import time

import pytest

from franel import congruences as cg
from franel import conjectures as cj
from franel import identities as ids
from franel.cache import CacheError, load_table, store_table
from franel.combinatorics import ROUTES, build_franel_table, franel
from franel.harness import run_sweep
from franel.modular import primes_in_range, two_squares_decompose


def _announce(name, started=None):
    suffix = f" ({time.monotonic() - started:.1f}s)" if started is not None else ""
    print(f"[ACCEPTANCE] {name}: PASS{suffix}")


def test_criterion_franel_route_agreement():
    started = time.monotonic()
    tables = {route: build_franel_table(300, route) for route in ROUTES}
    reference = tables["direct"].values
    assert reference[:4] == (1, 2, 10, 56)
    for route in ROUTES:
        assert tables[route].values == reference, route
    elapsed = time.monotonic() - started
    assert elapsed < 10, f"route agreement took {elapsed:.1f}s (budget 10s)"
    _announce("franel route agreement, n <= 300", started)


def test_criterion_identity_suite():
    started = time.monotonic()
    failures = []

    def run(label, reports):
        failures.extend((label, r.params) for r in reports if not r.passed)

    # both polynomial sides checked at 7 integer points per n (the stated
    # acceptance grid; each side has degree <= n in x, so this certifies
    # the instances swept, not the polynomial identity for n >= 7)
    run("macmahon", [
        ids.check_macmahon(n, x) for n in range(101) for x in range(-3, 4)
    ])
    run("strehl", [ids.check_strehl(n) for n in range(101)])
    run("sun_expansion", [ids.check_sun_expansion(n) for n in range(101)])
    run("induction", [
        ids.check_induction_identity(n, k)
        for n in range(81) for k in range(n + 1)
    ])
    run("summation_lemma", [
        ids.check_summation_lemma(n, k)
        for n in range(81) for k in range(n + 1)
    ])
    run("recurrence", [ids.check_recurrence(300)])
    run("integrality", [ids.check_integrality(n) for n in range(2, 201)])
    run("partial_fraction", [ids.check_partial_fraction(n) for n in range(201)])
    assert not failures, failures[:5]
    elapsed = time.monotonic() - started
    assert elapsed < 60, f"identity suite took {elapsed:.1f}s (budget 60s)"
    _announce("identity suite, documented ranges", started)


def test_criterion_theorem1_divisibility():
    started = time.monotonic()
    for n in range(2, 501):
        r = cg.check_theorem1(n)
        assert r.passed and r.witness is not None, n
    elapsed = time.monotonic() - started
    assert elapsed < 120, f"theorem1 sweep took {elapsed:.1f}s (budget 120s)"
    _announce("theorem 1 divisibility with witness, 2 <= n <= 500", started)


def test_criterion_theorem2_mod_p_cubed():
    started = time.monotonic()
    r3 = cg.check_theorem2(3)
    assert r3.lhs == r3.rhs == 24 and r3.modulus == 27
    for p in primes_in_range(3, 997):
        assert cg.check_theorem2(p).passed, p
    elapsed = time.monotonic() - started
    assert elapsed < 300, f"theorem2 sweep took {elapsed:.1f}s (budget 300s)"
    _announce("theorem 2 mod p^3, odd p < 1000", started)


def test_criterion_theorem3_mod_p():
    started = time.monotonic()
    checked = 0
    for p in primes_in_range(3, 997):
        if p % 4 == 3:
            assert cg.check_theorem3(p).passed, p
            checked += 1
    assert checked == 87
    _announce("theorem 3 mod p, p = 3 (mod 4), p < 1000", started)


def test_criterion_auxiliary_congruences():
    started = time.monotonic()
    for p in primes_in_range(3, 499):
        for aux_id in cg.AUX_IDS:
            if p == 3 and aux_id in ("morley", "multinomial"):
                continue
            reports = cg.check_auxiliary(aux_id, p)
            bad = [r.params for r in reports if not r.passed]
            assert not bad, (aux_id, p, bad[:3])
    _announce("auxiliary congruences, admissible p < 500, all inner params",
              started)


def test_criterion_conjecture1_and_theorem2_agreement():
    started = time.monotonic()
    for p in primes_in_range(5, 997):
        c1 = cj.check_conjecture1(p)
        t2 = cg.check_theorem2(p)
        assert c1.passed, p
        assert c1.lhs == t2.lhs % (p * p) and c1.rhs == t2.rhs % (p * p), p
    _announce("conjecture 1 mod p^2 and p^3-check agreement, 3 < p < 1000",
              started)


def test_criterion_conjecture2_all_cases():
    started = time.monotonic()
    for p in primes_in_range(3, 997):
        assert cj.check_conjecture2(p).passed, p
        if p % 12 == 1:
            ts = two_squares_decompose(p)
            assert (ts.y % 6 == 0) != ((ts.x - 3) % 6 == 0), p
    _announce("conjecture 2 mod p^2, all four cases, odd p < 1000", started)


def test_criterion_divisibility_families():
    started = time.monotonic()
    for t in cj.NEW1_TRIPLES + cj.NEW2_TRIPLES:
        for n in range(2, 501):
            r = cj.check_family(t, n)
            assert r.passed and r.witness is not None, (t, n)
    elapsed = time.monotonic() - started
    assert elapsed < 900, f"family sweep took {elapsed:.1f}s (budget 900s)"
    _announce("12 divisibility families, 2 <= n <= 500", started)


def test_criterion_third_conjecture_and_product_note():
    started = time.monotonic()
    for n in range(1, 121):
        bad = [r.params for r in cj.third_conjecture_grid(n) if not r.passed]
        assert not bad, (n, bad[:3])
    for p in primes_in_range(3, 50):
        for a in range(1, 6):
            for k in range(p):
                assert cj.check_product_note(p, a, k).passed, (p, a, k)
    _announce("third conjecture grid (n <= 120, m <= 3, |a_i| <= 3) "
              "and product note (p <= 50, a <= 5)", started)


def test_criterion_zw_sun_forms():
    started = time.monotonic()
    for n in range(1, 501):
        assert cj.check_zw_sun(n, "guo").passed, n
        if n >= 2:
            assert cj.check_zw_sun(n, "strengthened").passed, n
    _announce("alternating forms mod 2n^2 (n <= 500) and mod n^2(n-1)",
              started)


def test_criterion_harness_determinism_and_cache(tmp_path):
    started = time.monotonic()
    s1 = run_sweep(workers=1)
    s8 = run_sweep(workers=8)
    assert s1 == s8
    assert s1["total"]["fail"] == 0

    path = str(tmp_path / "cache.txt")
    table = build_franel_table(300)
    store_table(path, table)
    assert load_table(path).values == table.values

    lines = open(path).read().splitlines()
    lines[3] = lines[3].split("\t")[0] + "\t" + str(int(lines[3].split("\t")[1]) + 1)
    open(path, "w").write("\n".join(lines) + "\n")
    with pytest.raises(CacheError):
        load_table(path)
    _announce("full-sweep summary identical for 1 and 8 workers; cache "
              "roundtrip lossless; corruption detected", started)
