"""Exhaustive witness search for the symbol (a(a-1)/p) with a coprime to p+1.

For each prime p > 13 and sign sigma we look for the smallest a in
[2, (p-1)/2] with gcd(a, p+1) = 1 and (a(a-1)/p) = sigma. Since p+1 is
even only odd a can qualify. The symbol is invariant under
a -> p+1-a, so the first hit of an ascending scan over all a < p already
lies in the lower half; the reflection is applied defensively anyway.

Work is split into contiguous chunks of primes. Partial reports merge
associatively, so the result does not depend on the number of workers.
"""

from __future__ import annotations

import json
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np
from gmpy2 import legendre as _fast_legendre

from .bounds import SEARCH_LIMIT, SMALL_OMEGA_LIMIT, best_R
from .charsum import sieve_lhs
from .modnt import legendre, prime_modulus
from .sieve import SieveTable, build_sieve, primes_in

MIN_P = 13
MODES = ("paper", "full", "certified")


@dataclass(frozen=True)
class WitnessRecord:
    p: int
    sigma: int
    a: int

    def violations(self) -> list[str]:
        """Invariant failures, checked with the reference Legendre routine only."""
        p, a = self.p, self.a
        out = []
        if not 2 <= a <= (p - 1) // 2:
            out.append("a outside [2, (p-1)/2]")
        if math.gcd(a, p + 1) != 1:
            out.append("gcd(a, p+1) != 1")
        if a % 2 == 0:
            out.append("a even")
        if legendre(a * (a - 1), p) != self.sigma:
            out.append("symbol mismatch")
        return out

    def to_dict(self) -> dict:
        return {"p": self.p, "sigma": self.sigma, "a": self.a}


def _scan(p: int, want_plus: bool = True, want_minus: bool = True, early_exit: bool = True):
    """Smallest odd a >= 3 coprime to p+1 giving each sign, scanning a < p."""
    n = p + 1
    plus = minus = None
    gcd = math.gcd
    for a in range(3, p, 2):
        if gcd(a, n) != 1:
            continue
        if _fast_legendre(a * (a - 1), p) == 1:
            if plus is None:
                plus = a
        elif minus is None:
            minus = a
        if early_exit and (plus is not None or not want_plus) and (minus is not None or not want_minus):
            break
    return _reflect(p, plus), _reflect(p, minus)


def _reflect(p: int, a: int | None) -> int | None:
    if a is None or 2 * a <= p - 1:
        return a
    return p + 1 - a


def witness(p: int, sigma: int) -> WitnessRecord | None:
    """Minimal witness in [2, (p-1)/2] for (p, sigma), or None."""
    prime_modulus(p)
    if p <= MIN_P:
        raise ValueError(f"p={p} must exceed {MIN_P}")
    if sigma not in (1, -1):
        raise ValueError("sigma must be +1 or -1")
    plus, minus = _scan(p, want_plus=sigma == 1, want_minus=sigma == -1)
    a = plus if sigma == 1 else minus
    return None if a is None else WitnessRecord(p, sigma, a)


def brute_witness(p: int, sigma: int) -> int | None:
    """Reference: smallest a in [2, (p-1)/2] by plain enumeration with gcd and reciprocity."""
    for a in range(2, (p - 1) // 2 + 1):
        if math.gcd(a, p + 1) == 1 and legendre(a * (a - 1), p, check=False) == sigma:
            return a
    return None


@dataclass
class SearchReport:
    lo: int
    hi: int
    mode: str
    primes_checked: int = 0
    counterexamples: list[int] = field(default_factory=list)
    max_min_witness: WitnessRecord | None = None
    elapsed: float = 0.0
    omega_histogram: dict[int, int] = field(default_factory=dict)

    @property
    def verified(self) -> bool:
        return not self.counterexamples

    def merge(self, other: "SearchReport") -> "SearchReport":
        hist = dict(self.omega_histogram)
        for k, v in other.omega_histogram.items():
            hist[k] = hist.get(k, 0) + v
        cands = [w for w in (self.max_min_witness, other.max_min_witness) if w is not None]
        return SearchReport(
            lo=min(self.lo, other.lo),
            hi=max(self.hi, other.hi),
            mode=self.mode,
            primes_checked=self.primes_checked + other.primes_checked,
            counterexamples=sorted(set(self.counterexamples) | set(other.counterexamples)),
            max_min_witness=max(cands, key=_witness_key) if cands else None,
            elapsed=self.elapsed + other.elapsed,
            omega_histogram=dict(sorted(hist.items())),
        )

    def to_dict(self) -> dict:
        return {
            "range": {"lo": self.lo, "hi": self.hi},
            "mode": self.mode,
            "primes_checked": self.primes_checked,
            "counterexamples": list(self.counterexamples),
            "max_min_witness": None if self.max_min_witness is None else self.max_min_witness.to_dict(),
            "elapsed_ms": int(round(self.elapsed * 1000)),
            "omega_histogram": {str(k): v for k, v in sorted(self.omega_histogram.items())},
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, d: dict) -> "SearchReport":
        w = d["max_min_witness"]
        return cls(
            lo=d["range"]["lo"],
            hi=d["range"]["hi"],
            mode=d["mode"],
            primes_checked=d["primes_checked"],
            counterexamples=list(d["counterexamples"]),
            max_min_witness=None if w is None else WitnessRecord(w["p"], w["sigma"], w["a"]),
            elapsed=d["elapsed_ms"] / 1000,
            omega_histogram={int(k): v for k, v in d["omega_histogram"].items()},
        )

    def same_result(self, other: "SearchReport") -> bool:
        """Field-for-field equality ignoring elapsed time."""
        a, b = self.to_dict(), other.to_dict()
        a.pop("elapsed_ms")
        b.pop("elapsed_ms")
        return a == b


def _witness_key(w: WitnessRecord):
    return (w.a, w.p, w.sigma)


def certified_limits() -> dict[int, int]:
    """For omega(p+1) = n <= 8: the first integer x with sqrt(x)/(log x + 1) > best_R(n).

    Primes at or above these limits are settled by the sieve inequality;
    everything below must be searched.
    """
    out = {}
    for n in range(1, 9):
        r = float(best_R(n)[1])
        lo, hi = 2, 2
        while sieve_lhs(hi) <= r:
            hi *= 2
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if sieve_lhs(mid) > r:
                hi = mid
            else:
                lo = mid
        # 1e-9 relative safety margin on the float comparison
        out[n] = int(hi * (1 + 1e-9)) + 1
    return out


def select_primes(table: SieveTable, lo: int, hi: int, mode: str) -> np.ndarray:
    """Primes p in (max(lo, 13), hi) that the given mode must check."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    ps = primes_in(table, max(lo, MIN_P), hi)
    if mode == "full" or ps.size == 0:
        return ps
    om = table.omega[ps.astype(np.int64) + 1]
    if mode == "paper":
        keep = ((om >= 6) & (om <= 8) & (ps < SEARCH_LIMIT)) | ((om <= 5) & (ps < SMALL_OMEGA_LIMIT))
    else:
        limits = certified_limits()
        cap = np.zeros(16, dtype=np.int64)
        for n, x in limits.items():
            cap[n] = x
        keep = ps.astype(np.int64) < cap[om]
    return ps[keep]


def _search_chunk(args) -> SearchReport:
    primes, omegas, lo, hi, mode = args
    t0 = time.perf_counter()
    rep = SearchReport(lo=lo, hi=hi, mode=mode)
    best = None
    hist: dict[int, int] = {}
    bad = []
    for p, om in zip(primes.tolist(), omegas.tolist()):
        hist[om] = hist.get(om, 0) + 1
        plus, minus = _scan(p)
        if plus is None or minus is None:
            bad.append(p)
        for sigma, a in ((1, plus), (-1, minus)):
            if a is not None and (best is None or (a, p, sigma) > _witness_key(best)):
                best = WitnessRecord(p, sigma, a)
    rep.primes_checked = len(primes)
    rep.counterexamples = bad
    rep.max_min_witness = best
    rep.omega_histogram = dict(sorted(hist.items()))
    rep.elapsed = time.perf_counter() - t0
    return rep


def _chunks(ps: np.ndarray, size: int) -> Iterable[np.ndarray]:
    for i in range(0, ps.size, size):
        yield ps[i : i + size]


def search(
    lo: int,
    hi: int,
    mode: str = "full",
    table: SieveTable | None = None,
    threads: int = 1,
    chunk_size: int = 20000,
) -> SearchReport:
    """Check every selected prime in (lo, hi) for witnesses of both signs."""
    if lo < 0 or hi <= lo:
        raise ValueError(f"invalid range ({lo}, {hi})")
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if threads < 1:
        raise ValueError("threads must be >= 1")
    t0 = time.perf_counter()
    if table is None:
        table = build_sieve(max(hi, 2))
    if hi > table.limit:
        raise ValueError(f"hi={hi} exceeds sieve limit {table.limit}")
    ps = select_primes(table, lo, hi, mode)
    jobs = [(c, table.omega[c.astype(np.int64) + 1], lo, hi, mode) for c in _chunks(ps, chunk_size)]
    if threads == 1 or len(jobs) <= 1:
        parts = [_search_chunk(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(_search_chunk, jobs))
    total = SearchReport(lo=lo, hi=hi, mode=mode)
    for part in parts:
        total = total.merge(part)
    total.lo, total.hi = lo, hi
    total.elapsed = time.perf_counter() - t0
    return total


def default_threads() -> int:
    return len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else (os.cpu_count() or 1)
