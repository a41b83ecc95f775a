"""Finite fields F_q and dense polynomials over them.

Elements are ints in [0, q). For q = p prime they are residues. For
q = p^k they are base-p digit vectors of a polynomial in a primitive
root y, so the prime subfield is {0, ..., p-1}. Extension-field
arithmetic uses exp/log tables plus a Zech logarithm table for addition.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from .modnt import prime_power

MAX_Q = 1 << 20


class GF:
    def __init__(self, q: int):
        p, k = prime_power(q)
        if q > MAX_Q and k > 1:
            raise ValueError(f"extension fields are limited to q <= {MAX_Q}")
        self.q, self.p, self.k = q, p, k
        if k > 1:
            self._build_tables()

    def __repr__(self) -> str:
        return f"GF({self.q})"

    def _build_tables(self) -> None:
        p, k, q = self.p, self.k, self.q
        for tail in product(range(p), repeat=k):
            if tail[0] == 0:
                continue
            modulus = list(tail)  # y^k = -(tail . (1, y, ..., y^(k-1)))
            exp = [0] * (q - 1)
            vec = [1] + [0] * (k - 1)
            ok = True
            for e in range(q - 1):
                code = _encode(vec, p)
                if e and code == 1:
                    ok = False
                    break
                exp[e] = code
                top = vec[-1]
                vec = [0] + vec[:-1]
                for i in range(k):
                    vec[i] = (vec[i] - top * modulus[i]) % p
            if ok and _encode(vec, p) == 1:
                break
        else:  # pragma: no cover
            raise ArithmeticError(f"no primitive polynomial found for GF({q})")
        log = [0] * q
        for e, code in enumerate(exp):
            log[code] = e
        zech = [0] * (q - 1)
        for e, code in enumerate(exp):
            d0 = code % p
            plus1 = code - d0 + (d0 + 1) % p
            zech[e] = -1 if plus1 == 0 else log[plus1]
        self.modulus = tuple(modulus)
        self._exp, self._log, self._zech = exp, log, zech

    # arithmetic ---------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if a == 0:
            return b
        if b == 0:
            return a
        la, lb = self._log[a], self._log[b]
        z = self._zech[(lb - la) % (self.q - 1)]
        if z < 0:
            return 0
        return self._exp[(la + z) % (self.q - 1)]

    def neg(self, a: int) -> int:
        if self.k == 1:
            return -a % self.p
        return self.mul(a, self.p - 1)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        if self.k == 1:
            return pow(a, -1, self.p)
        return self._exp[-self._log[a] % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if self.k == 1:
            return pow(a, e, self.p)
        if a == 0:
            return 0 if e else 1
        return self._exp[self._log[a] * e % (self.q - 1)]

    def is_square(self, a: int) -> bool:
        """True for nonzero squares."""
        if self.p == 2:
            return a != 0
        return a != 0 and self.pow(a, (self.q - 1) // 2) == 1

    def from_prime_field(self, c: int) -> int:
        return c % self.p

    def elements(self) -> range:
        return range(self.q)


def _encode(vec: list[int], p: int) -> int:
    out = 0
    for d in reversed(vec):
        out = out * p + d
    return out


@lru_cache(maxsize=16)
def field(q: int) -> GF:
    return GF(q)


# polynomials over F_q: lists of elements, lowest degree first, no trailing zeros


def ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def padd(F: GF, a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] = F.add(out[i], x)
    return ptrim(out)


def psub(F: GF, a: list[int], b: list[int]) -> list[int]:
    return padd(F, a, [F.neg(x) for x in b])


def pmul(F: GF, a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
    return ptrim(out)


def pdivmod(F: GF, a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    r = list(a)
    db = len(b) - 1
    inv = F.inv(b[-1])
    q = [0] * max(len(a) - db, 0)
    for k in range(len(a) - 1 - db, -1, -1):
        c = F.mul(r[k + db], inv)
        if c:
            q[k] = c
            for j, y in enumerate(b):
                r[k + j] = F.sub(r[k + j], F.mul(c, y))
    return ptrim(q), ptrim(r[:db])


def pmod(F: GF, a: list[int], b: list[int]) -> list[int]:
    return pdivmod(F, a, b)[1]


def pmonic(F: GF, a: list[int]) -> list[int]:
    if not a:
        return a
    inv = F.inv(a[-1])
    return [F.mul(x, inv) for x in a]


def pgcd(F: GF, a: list[int], b: list[int]) -> list[int]:
    while b:
        a, b = b, pmod(F, a, b)
    return pmonic(F, a)


def pderiv(F: GF, a: list[int]) -> list[int]:
    out = []
    for i, x in enumerate(a[1:], start=1):
        c = x
        for _ in range(1, i % F.p):
            c = F.add(c, x)
        out.append(c if i % F.p else 0)
    return ptrim(out)


def ppowmod(F: GF, a: list[int], e: int, m: list[int]) -> list[int]:
    result = [1]
    base = pmod(F, a, m)
    while e:
        if e & 1:
            result = pmod(F, pmul(F, result, base), m)
        e >>= 1
        if e:
            base = pmod(F, pmul(F, base, base), m)
    return result


def peval(F: GF, a: list[int], x: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = F.add(F.mul(acc, x), c)
    return acc
