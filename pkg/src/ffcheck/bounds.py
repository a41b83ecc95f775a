"""Worst-case sieve bounds over the smallest possible prime factorizations.

R(l, s) bounds the right side of the refined sieve condition from above
when omega(p+1) = l + s, using the first l primes for the kept factors and
the next s primes for the removed ones. L(l, s) bounds the left side
sqrt(p)/(log p + 1) from below via p + 1 >= r_1 ... r_{l+s}.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass
from fractions import Fraction

import mpmath

from .charsum import guarded_gt, sieve_lhs, sieve_rhs
from .modnt import first_primes

N_MAX = 20
SEARCH_LIMIT = 7 * 10**7  # sqrt(x)/(log x + 1) at this x clears every R for n <= 8
SMALL_OMEGA_LIMIT = 9 * 10**6  # ... and at this x every R for n <= 5
R_CEILING = 445

_PRIMES = first_primes(2 * N_MAX + 1)


def R_exact(l: int, s: int) -> Fraction | None:
    """Exact R(l, s), or None when the denominator is nonpositive."""
    if l < 0 or s < 0:
        raise ValueError("l and s must be nonnegative")
    return sieve_rhs(tuple(_PRIMES[:l]), tuple(_PRIMES[l : l + s]))


def R_bound(l: int, s: int) -> float | None:
    r = R_exact(l, s)
    return None if r is None else float(r)


def L_bound(l: int, s: int, dps: int | None = None) -> float:
    P = math.prod(_PRIMES[: l + s])
    if dps is None:
        return math.sqrt(P) / (math.log(P) + 1)
    with mpmath.workdps(dps):
        return mpmath.sqrt(P) / (mpmath.log(P) + 1)


def best_R(n: int) -> tuple[int, Fraction] | None:
    """The l in [0, n] minimizing a positive R(l, n-l); ties go to the smaller l."""
    if n < 1:
        raise ValueError("best_R needs n >= 1")
    cands = [(r, l) for l in range(n + 1) if (r := R_exact(l, n - l)) is not None and r > 0]
    if not cands:
        return None
    r, l = min(cands)
    return l, r


def truncate3(x) -> Fraction:
    """Round a positive value down to 3 decimals (exact for Fractions, 40 digits for reals)."""
    if isinstance(x, Fraction):
        return Fraction(math.floor(x * 1000), 1000)
    with mpmath.workdps(40):
        return Fraction(int(mpmath.floor(mpmath.mpf(x) * 1000)), 1000)


def fmt3(x: Fraction) -> str:
    s = f"{x.numerator * 1000 // x.denominator // 1000}.{x.numerator * 1000 // x.denominator % 1000:03d}"
    return s.rstrip("0").rstrip(".")


@dataclass(frozen=True)
class BoundRow:
    n: int
    l: int  # noqa: E741
    s: int
    R: float
    L: float

    def truncated(self) -> tuple[str, str]:
        r = truncate3(R_exact(self.l, self.s))
        lval = truncate3(L_bound(self.l, self.s, dps=40))
        return fmt3(r), fmt3(lval)

    def cells(self) -> list[str]:
        r, lval = self.truncated()
        return [str(self.n), str(self.l), str(self.s), r, lval]


def bounds_table(n_max: int) -> list[BoundRow]:
    if not 1 <= n_max <= N_MAX:
        raise ValueError(f"n_max must lie in [1, {N_MAX}]")
    rows = []
    for n in range(1, n_max + 1):
        best = best_R(n)
        if best is None:
            raise ArithmeticError(f"no positive R for n={n}")
        l, r = best
        rows.append(BoundRow(n, l, n - l, float(r), L_bound(l, n - l)))
    return rows


COLUMNS = ("n", "l", "s", "R", "L")


def table_csv(rows: list[BoundRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS)
    for row in rows:
        w.writerow(row.cells())
    return buf.getvalue()


def table_json(rows: list[BoundRow]) -> str:
    out = []
    for row in rows:
        d = asdict(row)
        d["R_truncated"], d["L_truncated"] = row.truncated()
        out.append(d)
    return json.dumps(out, indent=2)


def table_text(rows: list[BoundRow]) -> str:
    lines = ["  n   l   s          R              L"]
    for row in rows:
        n, l, s, r, lval = row.cells()
        lines.append(f"{n:>3} {l:>3} {s:>3} {r:>10} {lval:>14}")
    return "\n".join(lines) + "\n"


@dataclass
class LargeOmegaReport:
    N0: int
    N0_expected: int
    phi_N0: int
    W_N0: int
    sixth_root_check: bool | None  # N0^(1/6) > 2 (log N0 + 1)
    phi_power_check: bool  # phi(N0) > N0^(2/3) W(N0), exact via cubes
    phi_direct_check: bool | None  # phi(N0) > 2 sqrt(N0) (log N0 + 1) W(N0)
    ratio_at_11: float  # (x - 1) / (2 x^(2/3)) at x = 11
    ratio_check: bool  # exact: ((x-1)/2)^3 > x^2
    increasing_check: bool  # x^(1/6)/(log x + 1) increasing past e^5 on a grid

    @property
    def passed(self) -> bool:
        return (
            self.N0 == self.N0_expected
            and self.sixth_root_check is True
            and self.phi_power_check
            and self.phi_direct_check is True
            and self.ratio_check
            and self.increasing_check
        )

    def to_dict(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        return d


def check_large_omega_lemma() -> LargeOmegaReport:
    rs = _PRIMES[:13]
    N0 = math.prod(rs)
    phi = math.prod(r - 1 for r in rs)
    W = 2**13
    logN = math.log(N0)
    sixth = guarded_gt(N0 ** (1 / 6), 2 * (logN + 1))
    power = phi**3 > N0**2 * W**3
    direct = guarded_gt(float(phi), 2 * math.sqrt(N0) * (logN + 1) * W)
    x = 11
    ratio = (x - 1) / (2 * x ** (2 / 3))
    ratio_exact = Fraction(x - 1, 2) ** 3 > x**2
    grid = [math.exp(5 + 0.05 * i) for i in range(1, 800)]
    vals = [g ** (1 / 6) / (math.log(g) + 1) for g in grid]
    increasing = all(b > a for a, b in zip(vals, vals[1:]))
    return LargeOmegaReport(
        N0=N0,
        N0_expected=304250263527210,
        phi_N0=phi,
        W_N0=W,
        sixth_root_check=sixth,
        phi_power_check=power,
        phi_direct_check=direct,
        ratio_at_11=ratio,
        ratio_check=ratio_exact,
        increasing_check=increasing,
    )


@dataclass
class ThresholdReport:
    f_search_limit: float
    f_small_omega_limit: float
    max_best_R_upto8: float
    max_best_R_upto5: float
    search_limit_clears: bool | None  # f(7e7) > 445 > max_{n<=8} best_R
    small_omega_clears: bool | None  # f(9e6) > max_{n<=5} best_R
    monotone_on_grid: bool

    @property
    def passed(self) -> bool:
        return self.search_limit_clears is True and self.small_omega_clears is True and self.monotone_on_grid

    def to_dict(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        return d


def verify_thresholds() -> ThresholdReport:
    f_hi = sieve_lhs(SEARCH_LIMIT)
    f_lo = sieve_lhs(SMALL_OMEGA_LIMIT)
    max8 = max(best_R(n)[1] for n in range(1, 9))
    max5 = max(best_R(n)[1] for n in range(1, 6))
    clears_hi = guarded_gt(f_hi, R_CEILING)
    if clears_hi:
        clears_hi = max8 < R_CEILING
    grid = [10 ** (3 + 5 * i / 2000) for i in range(2001)]
    vals = [sieve_lhs(g) for g in grid]
    return ThresholdReport(
        f_search_limit=f_hi,
        f_small_omega_limit=f_lo,
        max_best_R_upto8=float(max8),
        max_best_R_upto5=float(max5),
        search_limit_clears=clears_hi,
        small_omega_clears=guarded_gt(f_lo, float(max5)),
        monotone_on_grid=all(b > a for a, b in zip(vals, vals[1:])),
    )
