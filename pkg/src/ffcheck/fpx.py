"""Dense univariate polynomials over a prime field F_p.

A polynomial is a tuple of ints in [0, p), lowest degree first, with no
trailing zeros; the zero polynomial is ``()``.
"""

from __future__ import annotations

from typing import Sequence

Poly = tuple[int, ...]
ZERO: Poly = ()


def trim(a: Sequence[int], p: int) -> Poly:
    a = [x % p for x in a]
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def deg(a: Poly) -> int:
    return len(a) - 1  # -1 for the zero polynomial


def const(c: int, p: int) -> Poly:
    return trim((c,), p)


def add(a: Poly, b: Poly, p: int) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return trim(out, p)


def neg(a: Poly, p: int) -> Poly:
    return tuple((-x) % p for x in a)


def sub(a: Poly, b: Poly, p: int) -> Poly:
    return add(a, neg(b, p), p)


def scale(a: Poly, c: int, p: int) -> Poly:
    c %= p
    if c == 0:
        return ZERO
    return tuple(x * c % p for x in a)


def shift(a: Poly, k: int) -> Poly:
    return (0,) * k + a if a else ZERO


def mul(a: Poly, b: Poly, p: int) -> Poly:
    if not a or not b:
        return ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out, p)


def power(a: Poly, e: int, p: int) -> Poly:
    result: Poly = (1,)
    base = a
    while e:
        if e & 1:
            result = mul(result, base, p)
        e >>= 1
        if e:
            base = mul(base, base, p)
    return result


def divmod_(a: Poly, b: Poly, p: int) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    r = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - db, 0)
    for k in range(len(a) - 1 - db, -1, -1):
        c = r[k + db] * inv % p
        if c:
            q[k] = c
            for j, y in enumerate(b):
                r[k + j] = (r[k + j] - c * y) % p
    return trim(q, p), trim(r[:db], p)


def exact_div(a: Poly, b: Poly, p: int) -> Poly:
    q, r = divmod_(a, b, p)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


def mod(a: Poly, b: Poly, p: int) -> Poly:
    return divmod_(a, b, p)[1]


def monic(a: Poly, p: int) -> Poly:
    if not a:
        return a
    return scale(a, pow(a[-1], -1, p), p)


def gcd(a: Poly, b: Poly, p: int) -> Poly:
    while b:
        a, b = b, mod(a, b, p)
    return monic(a, p)


def deriv(a: Poly, p: int) -> Poly:
    return trim([i * x for i, x in enumerate(a)][1:], p)


def evaluate(a: Poly, x: int, p: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def resultant(a: Poly, b: Poly, p: int) -> int:
    """Res(a, b) over F_p with the true degrees of a and b (Euclidean recursion)."""
    if not a or not b:
        return 0
    result = 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        if db == 0:
            return result * pow(b[0], da, p) % p
        if da == 0:
            return result * pow(a[0], db, p) % p
        if da < db:
            a, b = b, a
            if da * db % 2:
                result = -result
            continue
        r = mod(a, b, p)
        if not r:
            return 0
        # Res(a, b) = (-1)^(da db) lc(b)^(da - deg r) Res(b, r)
        if da * db % 2:
            result = -result
        result = result * pow(b[-1], da - (len(r) - 1), p) % p
        a, b = b, r


def interpolate(xs: Sequence[int], ys: Sequence[int], p: int) -> Poly:
    """The unique polynomial of degree < len(xs) through the points (Newton form)."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) * pow(xs[i] - xs[i - j], -1, p) % p
    out: Poly = ZERO
    for i in range(n - 1, -1, -1):
        out = add(mul(out, trim((-xs[i], 1), p), p), const(coef[i], p), p)
    return out


def sqrt_poly(a: Poly, p: int) -> Poly | None:
    """A polynomial h with h^2 = a up to a square leading coefficient check, else None.

    Only decides whether ``a / lc(a)`` is a perfect square; the caller checks the
    leading coefficient separately.
    """
    if not a:
        return ZERO
    n = len(a) - 1
    if n % 2:
        return None
    m = monic(a, p)
    k = n // 2
    h = [0] * (k + 1)
    h[k] = 1
    inv2 = pow(2, -1, p)
    # match coefficients of m from the top down: m[n - i] determines h[k - i]
    for i in range(1, k + 1):
        acc = m[n - i]
        for j in range(1, i):
            acc -= h[k - j] * h[k - i + j]
        h[k - i] = acc * inv2 % p
    hh = trim(h, p)
    return hh if mul(hh, hh, p) == m else None
