import math
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from ffcheck.bounds import R_exact
from ffcheck.charsum import (
    count_report,
    count_sigma,
    eta,
    guarded_gt,
    partition,
    profile,
    refined_F,
    sieve_condition,
    weil_bound,
)

PRIMES = list(sympy.primerange(17, 3000))


def symbol(x, p):
    # independent oracle: Euler's criterion with plain pow
    x %= p
    if x == 0:
        return 0
    return 1 if pow(x, (p - 1) // 2, p) == 1 else -1


def brute_N(p, sigma, d):
    return sum(1 for a in range(2, p) if a % d == 0 and symbol(a * (a - 1), p) == sigma)


def brute_eta_sum(p, sigma, d):
    return sum(sigma * symbol(d * m * (d * m - 1), p) for m in range(p // d + 1))


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def test_eta_examples():
    assert eta(17, 1, 1, 0) == 0
    assert eta(17, 1, 1, 7) == 1
    assert eta(17, -1, 1, 7) == -1


def test_profile_examples():
    pr = profile(17, 1, 1)
    assert pr.N_d == 7 and pr.xi_d == -2
    pr2 = profile(17, 1, 2)
    assert pr2.N_d == brute_N(17, 1, 2)
    assert pr2.identity_holds() and pr2.floor_identity_holds()
    for p in (17, 19, 101):
        assert profile(p, 1, p + 1).N_d == 0


@pytest.mark.parametrize("p", PRIMES[::7])
def test_profile_matches_enumeration(p):
    for sigma in (1, -1):
        for d in divisors(p + 1):
            pr = profile(p, sigma, d)
            assert pr.N_d == brute_N(p, sigma, d)
            assert pr.eta_sum == brute_eta_sum(p, sigma, d)
            assert pr.xi_d == Fraction(pr.N_d) - Fraction(p + 1, 2 * d)


def test_floor_form_is_one_off_at_d1():
    # the unrestricted multiple count floor((p-1)/d) includes a = 1 when d = 1
    for p in PRIMES[:60]:
        for sigma in (1, -1):
            pr = profile(p, sigma, 1)
            assert 2 * pr.N_d == (p - 1) + pr.eta_sum - 1
            assert not pr.floor_identity_holds()
            for d in divisors(p + 1)[1:]:
                assert profile(p, sigma, d).floor_identity_holds()


def test_profile_rejects_bad_input():
    with pytest.raises(ValueError):
        profile(17, 1, 5)
    with pytest.raises(ValueError):
        profile(17, 0, 1)
    with pytest.raises(ValueError):
        profile(15, 1, 1)


@given(st.sampled_from(PRIMES), st.sampled_from([1, -1]))
@settings(max_examples=60)
def test_weil_bound_holds(p, sigma):
    for d in divisors(p + 1):
        assert abs(profile(p, sigma, d).eta_sum) <= weil_bound(p)


def test_count_sigma_examples():
    assert count_sigma(17, 1) == 2
    assert count_sigma(17, -1) == 2


def brute_F(p, sigma, k):
    return sum(1 for a in range(2, p) if math.gcd(a, k) == 1 and symbol(a * (a - 1), p) == sigma)


def test_refined_F_against_enumeration():
    assert refined_F(29, 1, 6) == brute_F(29, 1, 6) == 6
    rng = random.Random(5)
    for p in rng.sample(PRIMES, 25):
        for sigma in (1, -1):
            for k in divisors(p + 1):
                assert refined_F(p, sigma, k) == brute_F(p, sigma, k)


@given(st.sampled_from(PRIMES), st.sampled_from([1, -1]))
@settings(max_examples=80)
def test_inclusion_exclusion_and_phi_identity(p, sigma):
    r = count_report(p, sigma)
    assert r.direct == brute_F(p, sigma, p + 1)
    assert r.agrees and r.count1_holds
    assert r.phi_half == Fraction(sympy.totient(p + 1), 2)


def test_guarded_gt():
    assert guarded_gt(2.0, 1.0) is True
    assert guarded_gt(1.0, 2.0) is False
    assert guarded_gt(1.0, 1.0 + 1e-12) is None


def test_sieve_condition_2309():
    part = partition(2309, 2)
    assert part.q == (2, 3) and part.rest == (5, 7, 11)
    sc = sieve_condition(2309, 2)
    # with the smallest possible primes the actual rhs equals the worst case
    assert sc.rhs == R_exact(2, 3) == Fraction(18480, 109)
    assert sc.holds is False
    assert sc.delta == Fraction(1) - Fraction(1, 5) - Fraction(1, 7) - Fraction(1, 11)


def test_sieve_condition_rhs_at_most_worst_case():
    rng = random.Random(9)
    for p in rng.sample(list(sympy.primerange(10**4, 10**6)), 200):
        n = len(sympy.factorint(p + 1))
        for l in range(n + 1):
            sc = sieve_condition(p, l)
            worst = R_exact(l, n - l)
            if sc.rhs is not None and worst is not None and worst > 0:
                assert sc.rhs <= worst


def test_nonpositive_delta_is_flagged():
    # p + 1 = 2 * 3 * 5 * 7 * ...: with l = 0 the reciprocal sum exceeds 1
    sc = sieve_condition(2309, 0)
    assert sc.rhs is None and not sc.delta_positive and sc.holds is False
