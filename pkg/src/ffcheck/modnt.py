"""Modular arithmetic and small-integer number theory.

Everything here is exact integer arithmetic on inputs below 2**62.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import isqrt, prod
from typing import Sequence

import numpy as np

MAX_WORD = 1 << 62

# Deterministic Miller-Rabin witness set; correct for n < 3.3e24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_modulus(p: int) -> int:
    """Validate that ``p`` is an odd prime below 2**62 and return it."""
    p = int(p)
    if not 2 < p < MAX_WORD or p % 2 == 0 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime below 2^62")
    return p


def legendre(a: int, p: int, check: bool = True) -> int:
    """Legendre symbol (a/p) by reciprocity descent.

    Returns 0 if p divides a, +1 for a nonzero square mod p, -1 otherwise.
    """
    if check:
        prime_modulus(p)
    a %= p
    n = p
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def euler_criterion(a: int, p: int) -> int:
    """(a/p) via a^((p-1)/2) mod p, mapped to {-1, 0, 1}."""
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def legendre_table(p: int) -> np.ndarray:
    """int8 array chi with chi[x] = (x/p) for 0 <= x < p, built from the set of squares."""
    chi = np.full(p, -1, dtype=np.int8)
    x = np.arange(1, (p - 1) // 2 + 1, dtype=np.int64)
    chi[(x * x) % p] = 1
    chi[0] = 0
    return chi


def prime_power(q: int) -> tuple[int, int]:
    """(p, k) with q = p^k, p prime; ValueError otherwise."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = next(d for d in range(2, isqrt(q) + 1) if q % d == 0) if not is_prime(q) else q
    k, r = 0, q
    while r % p == 0:
        r //= p
        k += 1
    if r != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, k


def inverse_mod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"0 has no inverse mod {p}")
    return pow(a, -1, p)


@dataclass(frozen=True)
class FactoredNat:
    """A positive integer with its prime factorization, primes strictly increasing."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("FactoredNat needs n >= 1")
        if prod(q**e for q, e in self.factors) != self.n:
            raise ValueError(f"factors do not multiply to {self.n}")
        qs = [q for q, _ in self.factors]
        if any(a >= b for a, b in zip(qs, qs[1:])) or any(e < 1 for _, e in self.factors):
            raise ValueError("factor list must have increasing primes and positive exponents")
        if not all(is_prime(q) for q in qs):
            raise ValueError("factor list contains a non-prime")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(q for q, _ in self.factors)

    @property
    def omega(self) -> int:
        return len(self.factors)

    @property
    def mu(self) -> int:
        if any(e > 1 for _, e in self.factors):
            return 0
        return -1 if self.omega % 2 else 1

    @cached_property
    def phi(self) -> int:
        return prod(q ** (e - 1) * (q - 1) for q, e in self.factors)

    @property
    def W(self) -> int:
        return 1 << self.omega

    @property
    def rad(self) -> int:
        return prod(self.primes)


def small_primes(limit: int) -> list[int]:
    """Primes <= limit by a plain sieve of Eratosthenes."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for q in range(2, isqrt(limit) + 1):
        if flags[q]:
            flags[q * q :: q] = bytes(len(range(q * q, limit + 1, q)))
    return [i for i, f in enumerate(flags) if f]


def factorize(n: int, primes: Sequence[int] | None = None) -> FactoredNat:
    """Trial-division factorization.

    ``primes``, if given, must be an ascending list of consecutive primes
    starting at 2; once it is exhausted the scan continues over odd numbers.
    """
    n = int(n)
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    if n >= MAX_WORD:
        raise ValueError("factorize is limited to n < 2^62")
    m = n
    factors = []

    def strip(q):
        nonlocal m
        e = 0
        while m % q == 0:
            m //= q
            e += 1
        if e:
            factors.append((q, e))

    last = 1
    for q in primes or ():
        if q * q > m:
            break
        strip(q)
        last = q
    else:
        q = 2 if last < 2 else last + 1 + (last % 2 == 1)
        if q == 2:
            strip(2)
            q = 3
        while q * q <= m:
            strip(q)
            q += 2
    if m > 1:
        factors.append((m, 1))
    return FactoredNat(n, tuple(factors))


def squarefree_divisors(f: FactoredNat) -> list[tuple[int, int]]:
    """All (d, mu(d)) for squarefree d | n, sorted by d."""
    out = []
    qs = f.primes
    for k in range(len(qs) + 1):
        sign = -1 if k % 2 else 1
        for combo in combinations(qs, k):
            out.append((prod(combo), sign))
    out.sort()
    return out


def mobius(n: int) -> int:
    return factorize(n).mu


def totient(n: int) -> int:
    return factorize(n).phi


def first_primes(k: int) -> list[int]:
    """The first k primes."""
    out: list[int] = []
    limit = 32
    while len(out) < k:
        out = small_primes(limit)
        limit *= 2
    return out[:k]
