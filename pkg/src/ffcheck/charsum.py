"""Exact character-sum sieve quantities for the symbol (a(a-1)/p).

For d | p+1 and a sign sigma:

* ``N(d)``  -- number of 1 < a < p with d | a and (a(a-1)/p) = sigma,
* ``eta_d(m) = sigma * (dm(dm-1)/p)`` and its sum over 0 <= m <= p // d,
* ``xi(d) = N(d) - (p+1)/(2d)`` as an exact rational.

The exact link between them is ``2 N(d) = #{1 < a < p : d | a} + sum eta``.
The multiple count is floor((p-1)/d) for d > 1 but p-2 for d = 1, so the
common shorthand with floor((p-1)/d) alone is one too large at d = 1.

Counting is over 1 < a < p. The symbol vanishes at a in {0, 1}, so this
range gives the same counts as quantifying over all of F_p.

Transcendental comparisons (sqrt, log) go through :func:`guarded_gt`,
which refuses to decide when the two sides are within a relative margin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .modnt import FactoredNat, factorize, legendre, legendre_table, prime_modulus, squarefree_divisors

MARGIN = 1e-9


def guarded_gt(lhs: float, rhs: float, margin: float = MARGIN) -> bool | None:
    """lhs > rhs, or None when the two sides agree to within ``margin`` (relative)."""
    scale = max(abs(lhs), abs(rhs), 1e-300)
    if abs(lhs - rhs) <= margin * scale:
        return None
    return lhs > rhs


def weil_bound(p: int) -> float:
    return 2 * math.sqrt(p) * (math.log(p) + 1) - 2


def _check_sigma(sigma: int) -> int:
    if sigma not in (1, -1):
        raise ValueError(f"sigma must be +1 or -1, got {sigma}")
    return sigma


def _check_divisor(p: int, d: int) -> None:
    if d < 1 or (p + 1) % d:
        raise ValueError(f"d={d} does not divide p+1={p + 1}")


@lru_cache(maxsize=64)
def _chi(p: int) -> np.ndarray:
    t = legendre_table(p)
    t.setflags(write=False)
    return t


def _symbols(p: int, a: np.ndarray) -> np.ndarray:
    """(a(a-1)/p) for an int64 array of a values."""
    a = a % p
    return _chi(p)[(a * ((a - 1) % p)) % p].astype(np.int64)


def eta(p: int, sigma: int, d: int, m: int) -> int:
    prime_modulus(p)
    _check_sigma(sigma)
    _check_divisor(p, d)
    x = d * m
    return sigma * legendre(x * (x - 1), p, check=False)


@dataclass(frozen=True)
class CharSumProfile:
    p: int
    sigma: int
    d: int
    N_d: int
    eta_sum: int

    @property
    def xi_d(self) -> Fraction:
        return self.N_d - Fraction(self.p + 1, 2 * self.d)

    @property
    def range_count(self) -> int:
        """#{1 < a < p : d | a}; a = 1 drops out when d = 1."""
        return (self.p - 1) // self.d - (self.d == 1)

    def identity_holds(self) -> bool:
        return 2 * self.N_d == self.range_count + self.eta_sum

    def floor_identity_holds(self) -> bool:
        """The uncorrected form 2 N(d) = floor((p-1)/d) + sum eta; off by one at d = 1."""
        return 2 * self.N_d == (self.p - 1) // self.d + self.eta_sum

    def within_weil_bound(self) -> bool:
        return abs(self.eta_sum) <= weil_bound(self.p)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "sigma": self.sigma,
            "d": self.d,
            "N_d": self.N_d,
            "eta_sum": self.eta_sum,
            "xi_d": str(self.xi_d),
            "identity_holds": self.identity_holds(),
            "floor_identity_holds": self.floor_identity_holds(),
            "weil_bound": weil_bound(self.p),
        }


def _direct_N(p: int, sigma: int, d: int) -> int:
    a = np.arange(d, p, d, dtype=np.int64)
    a = a[a > 1]
    return int(np.count_nonzero(_symbols(p, a) == sigma))


def _eta_sum(p: int, sigma: int, d: int) -> int:
    m = np.arange(0, p // d + 1, dtype=np.int64)
    return sigma * int(_symbols(p, d * m).sum())


def profile(p: int, sigma: int, d: int) -> CharSumProfile:
    """N(d) by direct count and the eta sum by its own pass; raises if the identity breaks."""
    prime_modulus(p)
    _check_sigma(sigma)
    _check_divisor(p, d)
    prof = CharSumProfile(p, sigma, d, _direct_N(p, sigma, d), _eta_sum(p, sigma, d))
    if not prof.identity_holds():
        raise ArithmeticError(f"N(d) identity failed for {prof}")
    return prof


def _coprime_count(p: int, sigma: int, k: int) -> int:
    """#{1 < a < p : gcd(a, k) = 1, (a(a-1)/p) = sigma} by enumeration."""
    a = np.arange(2, p, dtype=np.int64)
    mask = np.gcd(a, k) == 1
    return int(np.count_nonzero(_symbols(p, a[mask]) == sigma))


def _mobius_sum(p: int, sigma: int, fk: FactoredNat) -> int:
    return sum(mu * _direct_N(p, sigma, d) for d, mu in squarefree_divisors(fk))


@dataclass(frozen=True)
class CountReport:
    p: int
    sigma: int
    direct: int
    mobius: int
    phi_half: Fraction
    xi_sum: Fraction

    @property
    def agrees(self) -> bool:
        return self.direct == self.mobius

    @property
    def count1_holds(self) -> bool:
        return self.direct - self.phi_half == self.xi_sum

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "sigma": self.sigma,
            "direct": self.direct,
            "mobius": self.mobius,
            "phi_half": str(self.phi_half),
            "xi_sum": str(self.xi_sum),
            "inclusion_exclusion_holds": self.agrees,
            "phi_identity_holds": self.count1_holds,
        }


def count_report(p: int, sigma: int) -> CountReport:
    prime_modulus(p)
    _check_sigma(sigma)
    if p <= 3:
        raise ValueError("count_sigma needs p > 3")
    f = factorize(p + 1)
    divs = squarefree_divisors(f)
    profs = {d: profile(p, sigma, d) for d, _ in divs}
    mob = sum(mu * profs[d].N_d for d, mu in divs)
    xi_sum = sum((mu * profs[d].xi_d for d, mu in divs), Fraction(0))
    return CountReport(p, sigma, _coprime_count(p, sigma, p + 1), mob, Fraction(f.phi, 2), xi_sum)


def count_sigma(p: int, sigma: int) -> int:
    """#{1 < a < p : gcd(a, p+1) = 1, (a(a-1)/p) = sigma}, checked two ways."""
    r = count_report(p, sigma)
    if not (r.agrees and r.count1_holds):
        raise ArithmeticError(f"inclusion-exclusion mismatch: {r}")
    return r.direct


def refined_F(p: int, sigma: int, k: int) -> int:
    """F(k) for k | p+1: direct coprime count, checked against the Mobius sum over d | k."""
    prime_modulus(p)
    _check_sigma(sigma)
    _check_divisor(p, k)
    direct = _coprime_count(p, sigma, k)
    mob = _mobius_sum(p, sigma, factorize(k))
    if direct != mob:
        raise ArithmeticError(f"F({k}) mismatch for p={p}: direct {direct} vs Mobius {mob}")
    return direct


@dataclass(frozen=True)
class SievePartition:
    p: int
    q: tuple[int, ...]  # the l smallest distinct primes of p+1, forming k
    rest: tuple[int, ...]  # the remaining distinct primes p_1 < ... < p_s

    @property
    def k(self) -> int:
        return math.prod(self.q)

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.q)

    @property
    def s(self) -> int:
        return len(self.rest)

    @property
    def delta(self) -> Fraction:
        return 1 - sum((Fraction(1, r) for r in self.rest), Fraction(0))


def partition(p: int, l: int) -> SievePartition:
    prime_modulus(p)
    qs = factorize(p + 1).primes
    if not 0 <= l <= len(qs):
        raise ValueError(f"l={l} outside [0, omega(p+1)={len(qs)}]")
    return SievePartition(p, qs[:l], qs[l:])


@dataclass(frozen=True)
class SieveCondition:
    p: int
    l: int
    s: int
    lhs: float
    rhs: Fraction | None  # None when delta <= 0
    delta: Fraction
    holds: bool | None  # None = indeterminate within the float margin

    @property
    def delta_positive(self) -> bool:
        return self.delta > 0

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "l": self.l,
            "s": self.s,
            "lhs": self.lhs,
            "rhs": None if self.rhs is None else float(self.rhs),
            "rhs_exact": None if self.rhs is None else str(self.rhs),
            "delta": str(self.delta),
            "delta_positive": self.delta_positive,
            "holds": self.holds,
        }


def sieve_rhs(q: tuple[int, ...], rest: tuple[int, ...]) -> Fraction | None:
    """(s+1) 2^(l+1) / (delta * prod(1 - 1/q_j)), or None if delta <= 0."""
    delta = 1 - sum((Fraction(1, r) for r in rest), Fraction(0))
    if delta <= 0:
        return None
    denom = delta * math.prod((1 - Fraction(1, x) for x in q), start=Fraction(1))
    return Fraction((len(rest) + 1) * 2 ** (len(q) + 1)) / denom


def sieve_lhs(x: float) -> float:
    return math.sqrt(x) / (math.log(x) + 1)


def sieve_condition(p: int, l: int) -> SieveCondition:
    part = partition(p, l)
    rhs = sieve_rhs(part.q, part.rest)
    lhs = sieve_lhs(p)
    holds = False if rhs is None else guarded_gt(lhs, float(rhs))
    return SieveCondition(p, part.l, part.s, lhs, rhs, part.delta, holds)
