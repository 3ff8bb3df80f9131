"""Truncated sum engines against frozen values and exact rational recomputation."""
import random
from fractions import Fraction as F

import pytest

from supercong.modarith import PrimePower, jacobi
from supercong.reference import (
    exact_factorial_sum,
    exact_franel,
    exact_genbinom_sum,
    fraction_mod,
)
from supercong.sums import (
    SumSpec,
    central3_identity_check,
    context,
    cubic_char_sum,
    factorial_sum,
    franel_sequence,
    genbinom_sum,
    legendre_poly_eval,
    pattern_terms,
    resolve_upper,
    weighted_sum,
    zp_sum,
)
from supercong.verdicts import NotApplicable

FRANEL_HEAD = [1, 2, 10, 56, 346, 2252, 15184, 104960, 739162]


def test_franel_recurrence_head():
    pp = PrimePower(1009, 1)
    assert franel_sequence(pp)[:9] == [f % 1009 for f in FRANEL_HEAD]
    for n, f in enumerate(FRANEL_HEAD):
        assert exact_franel(n) == f


def test_franel_recurrence_vs_direct_mod_prime_powers():
    for p, e in ((5, 3), (7, 2), (13, 2), (37, 1)):
        pe = p**e
        table = franel_sequence(PrimePower(p, e))
        for n in range(p):
            assert table[n] == exact_franel(n) % pe


def test_zp_frozen_values():
    assert zp_sum(-16, PrimePower(5, 2)) == 17
    assert zp_sum(96, PrimePower(7, 2)) == 0


def test_weighted_frozen_values():
    # linear-weighted variants of the same engines
    assert factorial_sum(SumSpec("ZP", 16, weight=(5, 2)), PrimePower(7, 2)) == 14
    got = factorial_sum(SumSpec("SIX3K", -3375, weight=(63, 8)), PrimePower(11, 2))
    assert got == 33
    assert weighted_sum(SumSpec("WEIGHTED", 16, weight=(5, 2)), PrimePower(7, 2)) == 14


def test_sextic_frozen_value():
    assert factorial_sum(SumSpec("SEXTIC", 1728), PrimePower(13, 2)) == 10


def test_resolve_upper_codes():
    assert resolve_upper("p-1", 13) == 12
    assert resolve_upper("(p-1)/2", 13) == 6
    assert resolve_upper("(p-1)/6", 13) == 2
    assert resolve_upper("(p-5)/6", 17) == 2
    assert resolve_upper("[p/6]", 17) == 2
    with pytest.raises(ValueError):
        SumSpec("QUARTIC", 3, upper="p/2")


def test_pattern_engines_match_exact():
    # BINOM63SQ divides by (3k)-shaped factors, so its admissible upper
    # bound is (p-1)/6; every other family runs to p-1
    uppers = {"BINOM63SQ": "(p-1)/6"}
    rng = random.Random(31)
    for family in ("QUARTIC", "SEXTIC", "CENTRAL3", "CUBE2K3K",
                   "BINOM63SQ", "SIX3K"):
        for _ in range(6):
            p = rng.choice((5, 7, 11, 13, 17, 19, 23))
            e = rng.randrange(1, 4)
            m = rng.randrange(-5000, 5000)
            if m == 0 or m % p == 0:
                continue
            spec = SumSpec(family, m, upper=uppers.get(family, "p-1"))
            got = factorial_sum(spec, PrimePower(p, e))
            assert got == exact_factorial_sum(spec, p, e)


def test_pattern_upper_guard():
    with pytest.raises(ValueError):
        factorial_sum(SumSpec("BINOM63SQ", -4096), PrimePower(13, 1))


def test_pattern_terms_are_exact_scaled_residues():
    spec = SumSpec("QUARTIC", 648)
    p, e = 13, 3
    pe = p**e
    ctx = context(p, e)
    x = F(1, 648)
    from supercong.reference import _exact_shape_value  # same shapes, exact ints

    for k, nu, unit in pattern_terms(ctx, "QUARTIC", pow(648, -1, pe), 12):
        want = F(_exact_shape_value("QUARTIC", k)) * x**k
        if nu < e:
            assert p**nu * unit % pe == fraction_mod(want, pe)
        else:
            assert fraction_mod(want, pe) == 0  # dropped terms vanish mod p^e


def test_zp_matches_exact():
    rng = random.Random(37)
    for _ in range(25):
        p = rng.choice((5, 7, 11, 13))
        e = rng.randrange(1, 4)
        m = rng.randrange(-400, 400)
        if m == 0 or m % p == 0:
            continue
        spec = SumSpec("ZP", m)
        assert factorial_sum(spec, PrimePower(p, e)) == exact_factorial_sum(spec, p, e)


def test_base_divisible_by_p_not_applicable():
    with pytest.raises(NotApplicable):
        factorial_sum(SumSpec("ZP", 14), PrimePower(7, 2))
    with pytest.raises(NotApplicable):
        factorial_sum(SumSpec("QUARTIC", 26), PrimePower(13, 1))


def test_genbinom_integer_case_matches_comb():
    import math

    pp = PrimePower(31, 2)
    # integer r, s degenerate to plain binomials
    for r, s in ((5, 7), (9, 9), (12, 4)):
        for x in (1, 2, -3):
            want = sum(
                math.comb(r, k) * math.comb(s, k) * x**k for k in range(11)
            ) % pp.m
            assert genbinom_sum(r, s, x, pp, 10) == want


def test_genbinom_matches_exact_rational():
    rng = random.Random(41)
    for _ in range(40):
        p = rng.choice((7, 11, 13, 17, 19))
        e = rng.randrange(1, 4)
        r = F(rng.randrange(-9, 9), rng.choice((1, 2, 3, 4, 6)))
        s = F(rng.randrange(-9, 9), rng.choice((1, 2, 3, 4, 6)))
        x = F(rng.randrange(-40, 40) or 1, rng.randrange(1, 30))
        if (r.denominator * s.denominator * x.denominator) % p == 0:
            continue
        upper = rng.randrange(0, p)
        pp = PrimePower(p, e)
        assert genbinom_sum(r, s, x, pp, upper) == exact_genbinom_sum(r, s, x, p, e, upper)


def test_genbinom_guards():
    pp = PrimePower(3, 1)
    with pytest.raises(NotApplicable):
        genbinom_sum(F(-1, 3), F(-1, 6), F(1, 2), pp, 1)
    pp = PrimePower(7, 1)
    with pytest.raises(ValueError):
        genbinom_sum(F(-1, 2), F(-1, 2), 1, pp, 7)
    with pytest.raises(ValueError):
        genbinom_sum(F(-1, 2), F(-1, 2), 1, pp, -1)


def test_legendre_poly_eval():
    # closed forms: P_0 = 1, P_1 = t, P_2 = (3t^2-1)/2, P_3 = (5t^3-3t)/2
    p = 101
    for t in range(-6, 7):
        assert legendre_poly_eval(0, t, p) == 1
        assert legendre_poly_eval(1, t, p) == t % p
        assert legendre_poly_eval(2, t, p) == (3 * t * t - 1) * pow(2, -1, p) % p
        assert legendre_poly_eval(3, t, p) == (5 * t**3 - 3 * t) * pow(2, -1, p) % p
    with pytest.raises(ValueError):
        legendre_poly_eval(101, 2, p)


def test_cubic_char_sum_basics():
    # direct definition check on a tiny prime
    p = 7
    want = sum(jacobi((x**3 + 2 * x + 3) % p, p) for x in range(p))
    assert cubic_char_sum(2, 3, p) == want
    # x -> x^3 permutes F_p when p = 2 mod 3, so the pure-cubic sum vanishes
    for p in (5, 11, 17, 23):
        assert cubic_char_sum(0, 4, p) == 0


def test_central3_identity_spot():
    rng = random.Random(43)
    for p in (5, 7, 11, 13, 37):
        for _ in range(8):
            m = rng.randrange(-10**4, 10**4)
            if m % p in (0, 16 % p, 64 % p):
                continue
            assert central3_identity_check(m, p)
    with pytest.raises(NotApplicable):
        central3_identity_check(16, 13)
    with pytest.raises(NotApplicable):
        central3_identity_check(5, 3)
