"""Polynomials in F_p[T][X]: arithmetic, resultants and discriminants in X.

Resultants use evaluation/interpolation in T when F_p has enough usable
points, and otherwise a subresultant PRS directly over F_p[T]. The
discriminant convention is Disc(f) = (-1)^(n(n-1)/2) Res_X(f, df/dX) for
monic f of X-degree n.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from . import fpx
from .fpx import Poly
from .modnt import inverse_mod, prime_modulus, prime_power


@dataclass(frozen=True)
class BivarPoly:
    """Element of F_p[T][X]; ``coeffs[i]`` is the T-polynomial multiplying X^i."""

    p: int
    coeffs: tuple[Poly, ...]

    def __post_init__(self):
        cs = [fpx.trim(c, self.p) for c in self.coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # construction -------------------------------------------------------

    @classmethod
    def from_terms(cls, p: int, terms: Mapping[tuple[int, int], int]) -> "BivarPoly":
        """Build from {(i, j): c} meaning c * T^j * X^i."""
        degx = max((i for (i, _), c in terms.items() if c % p), default=-1)
        grid = [[0] * (1 + max((j for (ii, j) in terms if ii == i), default=0)) for i in range(degx + 1)]
        for (i, j), c in terms.items():
            if i <= degx:
                grid[i][j] = (grid[i][j] + c) % p
        return cls(p, tuple(tuple(r) for r in grid))

    @classmethod
    def from_x_poly(cls, p: int, xs: Iterable[int]) -> "BivarPoly":
        return cls(p, tuple((c % p,) for c in xs))

    @classmethod
    def X(cls, p: int) -> "BivarPoly":
        return cls(p, ((), (1,)))

    @classmethod
    def T(cls, p: int) -> "BivarPoly":
        return cls(p, ((0, 1),))

    @classmethod
    def const(cls, p: int, c) -> "BivarPoly":
        return cls(p, ((_field_value(c, p),),))

    @classmethod
    def parse(cls, text: str, p: int) -> "BivarPoly":
        return parse_poly(text, p)

    # structure ----------------------------------------------------------

    @property
    def degX(self) -> int:
        return len(self.coeffs) - 1

    @property
    def degT(self) -> int:
        return max((len(c) - 1 for c in self.coeffs), default=-1)

    @property
    def lc(self) -> Poly:
        return self.coeffs[-1] if self.coeffs else ()

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == (1,)

    def terms(self) -> dict[tuple[int, int], int]:
        return {(i, j): x for i, c in enumerate(self.coeffs) for j, x in enumerate(c) if x}

    # arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "BivarPoly":
        if isinstance(other, BivarPoly):
            if other.p != self.p:
                raise ValueError("polynomials over different fields")
            return other
        return BivarPoly.const(self.p, other)

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + ((),) * (n - len(self.coeffs))
        b = other.coeffs + ((),) * (n - len(other.coeffs))
        return BivarPoly(self.p, tuple(fpx.add(x, y, self.p) for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return BivarPoly(self.p, tuple(fpx.neg(c, self.p) for c in self.coeffs))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return BivarPoly(self.p, ())
        p = self.p
        out: list[Poly] = [()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = fpx.add(out[i + j], fpx.mul(a, b, p), p)
        return BivarPoly(p, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = BivarPoly.const(self.p, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def derivative_x(self) -> "BivarPoly":
        return BivarPoly(self.p, tuple(fpx.scale(c, i, self.p) for i, c in enumerate(self.coeffs))[1:])

    def evaluate(self, t0: int, x0: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x0 + fpx.evaluate(c, t0, self.p)) % self.p
        return acc

    def specialize(self, t0: int) -> Poly:
        """f(t0, X) as a univariate polynomial over F_p."""
        return fpx.trim([fpx.evaluate(c, t0, self.p) for c in self.coeffs], self.p)

    def __str__(self) -> str:
        return format_poly(self)


# text format ------------------------------------------------------------------

_TERM_SPLIT = re.compile(r"\s*([+-])\s*")
_FACTOR = re.compile(r"^(?:(\d+)(?:/(\d+))?|([TXtx])(?:\^(\d+))?)$")


def _field_value(c, p: int) -> int:
    if isinstance(c, Fraction):
        return c.numerator * inverse_mod(c.denominator, p) % p
    return int(c) % p


def parse_poly(text: str, p: int) -> BivarPoly:
    """Parse ``c*T^j*X^i`` terms joined by + and -. Coefficients may be fractions a/b."""
    prime_modulus(p)
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    parts = _TERM_SPLIT.split(s)[1:]
    if len(parts) % 2:
        raise ValueError(f"cannot parse polynomial {text!r}")
    terms: dict[tuple[int, int], int] = {}
    for sign, body in zip(parts[::2], parts[1::2]):
        if not body:
            raise ValueError(f"dangling sign in {text!r}")
        c, i, j = 1, 0, 0
        body = re.sub(r"(\d)([TXtx])", r"\1*\2", body)
        for factor in body.split("*"):
            m = _FACTOR.match(factor.strip())
            if not m:
                raise ValueError(f"bad factor {factor!r} in {text!r}")
            num, den, var, exp = m.groups()
            if num is not None:
                c = c * _field_value(Fraction(int(num), int(den or 1)), p) % p
            elif var in "Tt":
                j += int(exp or 1)
            else:
                i += int(exp or 1)
        if sign == "-":
            c = -c
        terms[(i, j)] = (terms.get((i, j), 0) + c) % p
    return BivarPoly.from_terms(p, terms)


def _signed(c: int, p: int) -> int:
    return c - p if c > p // 2 else c


def format_poly(f: BivarPoly) -> str:
    """Canonical text: descending X, then descending T; coefficients as signed residues."""
    if f.is_zero():
        return "0"
    pieces = []
    for i in range(f.degX, -1, -1):
        c = f.coeffs[i]
        for j in range(len(c) - 1, -1, -1):
            v = _signed(c[j], f.p)
            if not v:
                continue
            mono = []
            if j:
                mono.append("T" if j == 1 else f"T^{j}")
            if i:
                mono.append("X" if i == 1 else f"X^{i}")
            mag = abs(v)
            body = "*".join(([str(mag)] if mag != 1 or not mono else []) + mono)
            pieces.append(("-" if v < 0 else "+", body))
    sign, body = pieces[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def format_tpoly(c: Poly, p: int) -> str:
    return format_poly(BivarPoly(p, (c,)))


# resultants -------------------------------------------------------------------


def resultant_bound(f: BivarPoly, g: BivarPoly) -> int:
    return f.degX * max(g.degT, 0) + g.degX * max(f.degT, 0)


def _good_points(f: BivarPoly, g: BivarPoly, need: int) -> list[int] | None:
    p = f.p
    pts = []
    for t in range(p):
        if fpx.evaluate(f.lc, t, p) and fpx.evaluate(g.lc, t, p):
            pts.append(t)
            if len(pts) == need:
                return pts
    return None


def _res_interp(f: BivarPoly, g: BivarPoly) -> Poly | None:
    p = f.p
    pts = _good_points(f, g, resultant_bound(f, g) + 1)
    if pts is None:
        return None
    vals = [fpx.resultant(f.specialize(t), g.specialize(t), p) for t in pts]
    return fpx.interpolate(pts, vals, p)


def _prem(a: list[Poly], b: list[Poly], p: int) -> list[Poly]:
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b over F_p[T]."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    e = len(a) - len(b) + 1
    while r and len(r) - 1 >= db:
        c = r[-1]
        k = len(r) - 1 - db
        r = [fpx.mul(x, lb, p) for x in r]
        for j, y in enumerate(b):
            r[k + j] = fpx.sub(r[k + j], fpx.mul(c, y, p), p)
        while r and not r[-1]:
            r.pop()
        e -= 1
    if e:
        m = fpx.power(lb, e, p)
        r = [fpx.mul(x, m, p) for x in r]
    return r


def _res_subresultant(f: BivarPoly, g: BivarPoly) -> Poly:
    p = f.p
    A, B = list(f.coeffs), list(g.coeffs)
    m, n = len(A) - 1, len(B) - 1
    if m == 0:
        return fpx.power(A[0], n, p)
    if n == 0:
        return fpx.power(B[0], m, p)
    s = 1
    if m < n:
        A, B = B, A
        if m * n % 2:
            s = -1
    g_: Poly = (1,)
    h: Poly = (1,)
    while True:
        dA, dB = len(A) - 1, len(B) - 1
        delta = dA - dB
        if dA % 2 and dB % 2:
            s = -s
        R = _prem(A, B, p)
        if not R:
            return ()
        div = fpx.mul(g_, fpx.power(h, delta, p), p)
        A, B = B, [fpx.exact_div(c, div, p) for c in R]
        g_ = A[-1]
        if delta:
            h = fpx.exact_div(fpx.power(g_, delta, p), fpx.power(h, delta - 1, p), p)
        if len(B) == 1:
            dA = len(A) - 1
            h = fpx.exact_div(fpx.power(B[0], dA, p), fpx.power(h, dA - 1, p), p)
            return fpx.scale(h, s, p)


def resultant_x(f: BivarPoly, g: BivarPoly, method: str = "auto") -> Poly:
    """Res_X(f, g) in F_p[T], taking the true X-degrees of f and g.

    ``method`` is ``"interp"``, ``"subres"`` or ``"auto"`` (interpolation when
    enough points exist, subresultant PRS otherwise).
    """
    if f.p != g.p:
        raise ValueError("polynomials over different fields")
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of the zero polynomial")
    if method not in ("auto", "interp", "subres"):
        raise ValueError(f"unknown method {method!r}")
    if method != "subres":
        r = _res_interp(f, g)
        if r is not None:
            return r
        if method == "interp":
            raise ValueError(f"F_{f.p} has too few points for interpolation")
    return _res_subresultant(f, g)


def discriminant_x(f: BivarPoly, method: str = "auto") -> Poly:
    if not f.is_monic():
        raise ValueError("discriminant_x needs a monic polynomial in X")
    n = f.degX
    if n < 2:
        raise ValueError("discriminant_x needs X-degree >= 2")
    df = f.derivative_x()
    if df.is_zero():
        return ()
    r = resultant_x(f, df, method)
    return fpx.neg(r, f.p) if (n * (n - 1) // 2) % 2 else r


# monomial discriminants -------------------------------------------------------


@dataclass(frozen=True)
class ScaledMonomial:
    """c * T^m with c a nonzero element of F_p."""

    p: int
    c: int
    m: int

    @classmethod
    def recognize(cls, tp: Poly, p: int) -> "ScaledMonomial | None":
        nz = [(j, x) for j, x in enumerate(tp) if x]
        if len(nz) != 1:
            return None
        j, x = nz[0]
        return cls(p, x, j)

    def __str__(self) -> str:
        return format_tpoly(fpx.shift((self.c,), self.m), self.p)

    def to_dict(self) -> dict:
        return {"c": self.c, "c_signed": _signed(self.c, self.p), "m": self.m, "text": str(self)}


def is_square_in_FqT(mono: ScaledMonomial, q: int) -> bool:
    """c T^m is a square in F_q(T) iff m is even and c is a square in F_q."""
    p, _ = prime_power(q)
    if p != mono.p:
        raise ValueError(f"q={q} is not a power of p={mono.p}")
    return mono.m % 2 == 0 and pow(mono.c, (q - 1) // 2, p) == 1


def tpoly_is_square(tp: Poly, p: int, q: int | None = None) -> bool:
    """Whether a nonzero D in F_p[T] is a square in F_q(T) (q a power of p)."""
    q = p if q is None else q
    if not tp:
        return True
    if fpx.sqrt_poly(tp, p) is None:
        return False
    return pow(tp[-1], (q - 1) // 2, p) == 1


# families ---------------------------------------------------------------------

TABLE_FAMILY = {
    3: ("X^4 + X + T", "T^3", "S_4"),
    5: ("X^6 + X^5 + 3*X^3 + T*X + T", "4*T^3", "S_6"),
    7: ("X^8 + 3*X^2 + T*X - 2", "4*T^2", "A_8"),
    11: ("X^12 + X^3 + 3*X^2 + T*X + 4*X + 1", "2*T^3", "S_12"),
    13: ("X^14 + 7*X^3 + 10*X^2 + 9*T^2*X + 7*X + 1", "-T^6", "A_14"),
}


@dataclass
class TableCheck:
    p: int
    poly: str
    disc: str
    expected: str
    group: str
    matches: bool

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def disc_table(p: int | None = None) -> list[TableCheck]:
    out = []
    for q, (text, want, group) in TABLE_FAMILY.items():
        if p is not None and q != p:
            continue
        f = parse_poly(text, q)
        d = discriminant_x(f)
        expected = parse_poly(want, q).coeffs[0]
        out.append(TableCheck(q, format_poly(f), format_tpoly(d, q), format_tpoly(expected, q), group, d == expected))
    if p is not None and not out:
        raise ValueError(f"no table polynomial over F_{p}")
    return out


NEW_VARIANTS = {
    "(X-4)^(p-1)(X-4/3)": lambda p: (p - 1, 1),
    "(X-4)^(p-2)(X-4/3)": lambda p: (p - 2, 1),
    "(X-4)^(p-2)(X-4/3)^2": lambda p: (p - 2, 2),
}


def new_family_poly(p: int, variant: str) -> BivarPoly:
    """X^p (X-1) - T (X-4)^e1 (X-4/3)^e2 for the named variant."""
    e1, e2 = NEW_VARIANTS[variant](p)
    X, T = BivarPoly.X(p), BivarPoly.T(p)
    v = (X - 4) ** e1 * (X - BivarPoly.const(p, Fraction(4, 3))) ** e2
    return X**p * (X - 1) - T * v


@dataclass
class NewFamilyReport:
    p: int
    expected: ScaledMonomial
    discs: dict[str, str]
    matching: list[str]

    @property
    def matches(self) -> bool:
        return bool(self.matching)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "expected": str(self.expected),
            "discriminants": self.discs,
            "matching_variants": self.matching,
            "matches": self.matches,
        }


def disc_family_new(p: int) -> NewFamilyReport:
    prime_modulus(p)
    if p <= 3:
        raise ValueError("the n = p+1 family needs p > 3")
    c = (-1) ** ((p + 1) // 2) * 4 * inverse_mod(243, p) % p
    expected = ScaledMonomial(p, c, p + 2)
    want = fpx.shift((c,), p + 2)
    discs, matching = {}, []
    for name in NEW_VARIANTS:
        d = discriminant_x(new_family_poly(p, name))
        discs[name] = format_tpoly(d, p)
        if d == want:
            matching.append(name)
    return NewFamilyReport(p, expected, discs, matching)


def mtr_family_poly(p: int, a: int) -> BivarPoly:
    """(X+1)(X + a/(a-1))^p - s X^a, with the indeterminate s in the T slot."""
    X, S = BivarPoly.X(p), BivarPoly.T(p)
    b = BivarPoly.const(p, Fraction(a, a - 1))
    return (X + 1) * (X + b) ** p - S * X**a


@dataclass
class MtrReport:
    p: int
    a: int
    disc: str
    formula: ScaledMonomial
    matches: bool

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "a": self.a,
            "disc": self.disc,
            "formula": str(self.formula).replace("T", "s"),
            "formula_constant": self.formula.c,
            "formula_exponent": self.formula.m,
            "matches": self.matches,
        }


def disc_family_mtr(p: int, a: int) -> MtrReport:
    prime_modulus(p)
    if p <= 5:
        raise ValueError("the two-parameter family needs p > 5")
    if not 2 <= a <= (p - 1) // 2 or math.gcd(a, p + 1) != 1:
        raise ValueError(f"a={a} must satisfy 2 <= a <= (p-1)/2 and gcd(a, p+1) = 1")
    d = discriminant_x(mtr_family_poly(p, a))
    num = pow(a, p * a - p + a, p)
    den = pow(a - 1, p * a - 2 * p + a - 1, p)
    c = (-1) ** ((p + 1) // 2) * num * inverse_mod(den, p) % p
    formula = ScaledMonomial(p, c, p + 1)
    return MtrReport(p, a, format_tpoly(d, p).replace("T", "s"), formula, d == fpx.shift((c,), p + 1))


@dataclass
class RealizationCertificate:
    n: int
    p: int
    disc: str
    monomial: ScaledMonomial | None
    checks: dict[str, bool]
    clause: str | None  # "ii", "iii" or None
    reason: str

    @property
    def hypotheses_verified(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "disc": self.disc,
            "monomial": None if self.monomial is None else self.monomial.to_dict(),
            "checks": self.checks,
            "hypotheses_verified": self.hypotheses_verified,
            "clause": self.clause,
            "reason": self.reason,
        }


def realization_cert(f: BivarPoly, n: int, p: int, group_evidence: str | None = None) -> RealizationCertificate:
    """Check the monomial-discriminant hypotheses and name the clause the evidence points to.

    ``group_evidence`` is "S_n", "A_n" or None; it is taken as given, never proved.
    Even when every check passes the certificate only states that the
    hypotheses hold.
    """
    if f.p != p:
        raise ValueError("polynomial field does not match p")
    if not f.is_monic() or f.degX != n:
        raise ValueError("f must be monic of X-degree n")
    d = discriminant_x(f)
    mono = ScaledMonomial.recognize(d, p)
    checks = {
        "n >= p > 2": n >= p > 2,
        "p does not divide n": n % p != 0,
        "disc is c*T^m": mono is not None,
        "m <= p-1": mono is not None and mono.m <= p - 1,
    }
    clause, reason = None, "hypotheses verified"
    if mono is None:
        reason = "discriminant is not a scaled monomial"
    elif not all(checks.values()):
        reason = "failed: " + ", ".join(k for k, v in checks.items() if not v)
    elif group_evidence in ("S_n", f"S_{n}") and mono.m % 2 == 1:
        clause, reason = "ii", "hypotheses verified; m odd with S_n evidence"
    elif group_evidence in ("A_n", f"A_{n}") and n >= 5:
        clause, reason = "iii", "hypotheses verified; n >= 5 with A_n evidence"
    elif group_evidence is not None:
        reason = "hypotheses verified; evidence does not select a clause"
    return RealizationCertificate(n, p, format_tpoly(d, p), mono, checks, clause, reason)

