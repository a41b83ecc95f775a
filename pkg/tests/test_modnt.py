import math

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from ffcheck.modnt import (
    FactoredNat,
    euler_criterion,
    factorize,
    first_primes,
    inverse_mod,
    is_prime,
    legendre,
    legendre_table,
    mobius,
    prime_modulus,
    prime_power,
    squarefree_divisors,
    totient,
)

ODD_PRIMES = [p for p in sympy.primerange(3, 2000)]


def test_legendre_examples():
    assert legendre(4, 7) == 1
    assert legendre(0, 5) == 0
    assert legendre(3, 7) == -1


def test_legendre_rejects_non_prime():
    for bad in (1, 2, 9, 15, -7):
        with pytest.raises(ValueError):
            legendre(1, bad)


@pytest.mark.parametrize("p", [p for p in ODD_PRIMES if p < 1000])
def test_legendre_agrees_with_euler_everywhere(p):
    table = legendre_table(p)
    for a in range(p):
        e = euler_criterion(a, p)
        assert legendre(a, p) == e == table[a]


@given(st.sampled_from(ODD_PRIMES), st.integers(-10**12, 10**12), st.integers(-10**12, 10**12))
def test_legendre_multiplicative(p, a, b):
    assert legendre(a * b, p) == legendre(a, p) * legendre(b, p)


@given(st.sampled_from(ODD_PRIMES))
@settings(max_examples=30)
def test_legendre_balanced(p):
    assert sum(legendre(a, p) for a in range(1, p)) == 0


@given(st.sampled_from(ODD_PRIMES), st.integers(-10**6, 10**6))
def test_legendre_matches_sympy(p, a):
    want = 0 if a % p == 0 else sympy.legendre_symbol(a % p, p)
    assert legendre(a, p) == want


def test_large_modulus():
    p = 2**61 - 1
    assert prime_modulus(p) == p
    assert legendre(2, p) == euler_criterion(2, p)
    with pytest.raises(ValueError):
        prime_modulus(2**62 + 135)


def test_is_prime_vs_sympy():
    for n in range(-3, 5000):
        assert is_prime(n) == sympy.isprime(n)
    for n in (2**61 - 1, 2**61 + 1, 3215031751, 341550071728321):
        assert is_prime(n) == sympy.isprime(n)


def test_factorize_examples():
    f = factorize(1)
    assert (f.n, f.factors, f.omega, f.mu, f.phi) == (1, (), 0, 1, 1)
    f = factorize(12)
    assert f.factors == ((2, 2), (3, 1)) and f.omega == 2 and f.mu == 0
    f = factorize(30030)
    assert f.primes == (2, 3, 5, 7, 11, 13) and f.omega == 6 and f.W == 64


@given(st.integers(1, 10**9))
def test_factorize_matches_sympy(n):
    f = factorize(n)
    assert dict(f.factors) == sympy.factorint(n)
    assert f.phi == sympy.totient(n)
    assert f.rad == math.prod(f.primes)


def test_factored_nat_rejects_bad_factors():
    with pytest.raises(ValueError):
        FactoredNat(12, ((2, 1), (3, 1)))
    with pytest.raises(ValueError):
        FactoredNat(4, ((4, 1),))


def test_squarefree_divisors_examples():
    assert squarefree_divisors(factorize(1)) == [(1, 1)]
    want = [(1, 1), (2, -1), (3, -1), (6, 1)]
    assert squarefree_divisors(factorize(12)) == want
    assert squarefree_divisors(factorize(18)) == want


def test_mobius_sum_over_divisors():
    mu = [0] + [mobius(n) for n in range(1, 10**4 + 1)]
    for n in range(1, 10**4 + 1):
        s = sum(mu[d] for d in sympy.divisors(n))
        assert s == (1 if n == 1 else 0)


@given(st.integers(1, 10**7))
def test_squarefree_divisors_cover_radical(n):
    f = factorize(n)
    divs = squarefree_divisors(f)
    assert len(divs) == f.W
    assert all(f.rad % d == 0 and mu == mobius(d) for d, mu in divs)
    assert sum(mu for _, mu in divs) == (1 if n == 1 else 0)


def test_totient_and_first_primes():
    assert [totient(n) for n in range(1, 11)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4]
    assert first_primes(13)[-1] == 41
    assert math.prod(first_primes(13)) == 304250263527210


def test_prime_power_and_inverse():
    assert prime_power(243) == (3, 5)
    assert prime_power(13) == (13, 1)
    assert prime_power(4) == (2, 2)
    with pytest.raises(ValueError):
        prime_power(12)
    assert inverse_mod(3, 7) * 3 % 7 == 1
    with pytest.raises(ZeroDivisionError):
        inverse_mod(0, 7)
