"""Segmented prime sieve with a distinct-prime-factor count array.

``omega[n]`` is built per segment by dividing a residual copy of the
segment by every base prime power; whatever survives above 1 is one
extra prime factor larger than sqrt(X).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

import numpy as np

from .modnt import small_primes

MAX_LIMIT = 1 << 31
DEFAULT_SEGMENT = 1 << 18  # 256k entries; the uint32 residual is ~1 MB


@dataclass(frozen=True)
class SieveTable:
    limit: int
    primes: np.ndarray  # uint32, ascending, all primes <= limit
    omega: np.ndarray  # uint8, length limit + 1

    def primes_in(self, lo: int, hi: int) -> np.ndarray:
        return primes_in(self, lo, hi)


def build_sieve(X: int, segment_size: int = DEFAULT_SEGMENT) -> SieveTable:
    if not 2 <= X <= MAX_LIMIT:
        raise ValueError(f"sieve limit must lie in [2, 2^31], got {X}")
    if segment_size < 16:
        raise ValueError("segment_size too small")
    base = np.array(small_primes(isqrt(X)), dtype=np.int64)
    omega = np.zeros(X + 1, dtype=np.uint8)
    chunks = []
    for lo in range(0, X + 1, segment_size):
        hi = min(lo + segment_size, X + 1)  # exclusive
        rem = np.arange(lo, hi, dtype=np.uint32)
        composite = np.zeros(hi - lo, dtype=bool)
        om = omega[lo:hi]
        for q in base.tolist():
            start = -lo % q
            if start >= hi - lo:
                continue
            om[start::q] += 1
            view = rem[start::q]
            view //= q
            first_sq = max(q * q, lo + start)
            if first_sq < hi:
                composite[first_sq - lo :: q] = True
            qk = q * q
            while qk < hi:
                s = -lo % qk
                if s < hi - lo:
                    view = rem[s::qk]
                    view //= q
                qk *= q
        om[rem > 1] += 1
        if lo == 0:
            om[:2] = 0
            composite[:2] = True
        chunks.append(np.flatnonzero(~composite).astype(np.uint32) + np.uint32(lo))
    primes = np.concatenate(chunks) if chunks else np.zeros(0, dtype=np.uint32)
    primes.setflags(write=False)
    omega.setflags(write=False)
    return SieveTable(limit=X, primes=primes, omega=omega)


def primes_in(table: SieveTable, lo: int, hi: int) -> np.ndarray:
    """Ascending primes strictly between lo and hi."""
    if lo > hi:
        raise ValueError(f"inverted bounds ({lo}, {hi})")
    if hi > table.limit:
        raise ValueError(f"hi={hi} exceeds sieve limit {table.limit}")
    ps = table.primes
    i = np.searchsorted(ps, lo, side="right")
    j = np.searchsorted(ps, hi, side="left")
    return ps[i:j]
