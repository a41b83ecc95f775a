"""Frobenius cycle-type evidence for Gal(f / F_q(T)).

For t0 in F_q with f(t0, X) squarefree, the degrees of the irreducible
factors of f(t0, X) over F_q are the cycle type of a Frobenius element in
the Galois group. Sampling many t0 gives evidence about which cycle types
occur; combined with the discriminant's square class it separates the
alternating case from the symmetric one. None of this proves anything.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field

from .gf import GF, field as gf_field, pderiv, pdivmod, peval, pgcd, pmonic, ppowmod, psub
from .polyring import BivarPoly, ScaledMonomial, discriminant_x, format_tpoly, is_square_in_FqT, tpoly_is_square


def degree_sequence(f: list[int], F: GF) -> tuple[tuple[int, ...] | None, bool]:
    """Sorted factor degrees of a monic f over F, or (None, False) if f is not squarefree."""
    if not f:
        raise ValueError("zero polynomial")
    f = pmonic(F, list(f))
    if len(f) == 1:
        return (), True
    df = pderiv(F, f)
    if not df or len(pgcd(F, f, df)) > 1:
        return None, False
    degs: list[int] = []
    x = [0, 1]
    h = x
    i = 0
    while len(f) - 1 >= 2 * (i + 1):
        i += 1
        h = ppowmod(F, h, F.q, f)
        g = pgcd(F, f, psub(F, h, x))
        dg = len(g) - 1
        if dg > 0:
            degs.extend([i] * (dg // i))
            f, _ = pdivmod(F, f, g)
            h = pdivmod(F, h, f)[1] if len(f) > 1 else []
    if len(f) > 1:
        degs.append(len(f) - 1)
    return tuple(sorted(degs)), True


def parity(seq: tuple[int, ...], n: int) -> int:
    """Sign of a permutation with the given cycle type: +1 even, -1 odd."""
    return -1 if (n - len(seq)) % 2 else 1


def specialize(f: BivarPoly, t0: int, F: GF) -> list[int]:
    coeffs = [peval(F, [F.from_prime_field(c) for c in tp], t0) for tp in f.coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


@dataclass(frozen=True)
class CycleTypeSample:
    t0: int
    degree_sequence: tuple[int, ...] | None
    squarefree: bool
    parity: int | None
    disc_value_square: bool | None

    @property
    def coherent(self) -> bool | None:
        """Even parity iff Disc(f)(t0) is a square; None for non-squarefree samples."""
        if not self.squarefree:
            return None
        return (self.parity == 1) == self.disc_value_square


@dataclass
class EvidenceReport:
    q: int
    n: int
    seed: int
    num_samples: int
    disc: str
    disc_square: bool
    squarefree_samples: int = 0
    histogram: dict[tuple[int, ...], int] = field(default_factory=dict)
    found_transposition_type: bool = False
    found_p_cycle_type: bool = False
    found_n_cycle: bool = False
    odd_type_seen: bool = False
    all_even: bool = True
    coherence_failures: list[int] = field(default_factory=list)
    verdict: str = "inconclusive"

    @property
    def coherent(self) -> bool:
        return not self.coherence_failures

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "seed": self.seed,
            "num_samples": self.num_samples,
            "disc": self.disc,
            "disc_square": self.disc_square,
            "squarefree_samples": self.squarefree_samples,
            "histogram": {"{" + ",".join(map(str, k)) + "}": v for k, v in sorted(self.histogram.items())},
            "found_transposition_type": self.found_transposition_type,
            "found_p_cycle_type": self.found_p_cycle_type,
            "found_n_cycle": self.found_n_cycle,
            "odd_type_seen": self.odd_type_seen,
            "all_even": self.all_even,
            "parity_discriminant_coherent": self.coherent,
            "coherence_failures": self.coherence_failures,
            "verdict": self.verdict,
        }


def sample_t0(q: int, num_samples: int, seed: int) -> list[int]:
    """The ordered sample of t0 values; uniform with replacement, fixed by the seed."""
    rng = random.Random(seed)
    return [rng.randrange(q) for _ in range(num_samples)]


def sample_evidence(f: BivarPoly, q: int, num_samples: int = 200, seed: int = 0) -> EvidenceReport:
    if not f.is_monic():
        raise ValueError("f must be monic in X")
    if num_samples < 1:
        raise ValueError("num_samples must be >= 1")
    F = gf_field(q)
    if F.p != f.p:
        raise ValueError(f"q={q} is not a power of p={f.p}")
    n, p = f.degX, f.p
    disc = discriminant_x(f)
    mono = ScaledMonomial.recognize(disc, p)
    if mono is not None:
        disc_sq = is_square_in_FqT(mono, q)
    else:
        disc_sq = bool(disc) and tpoly_is_square(disc, p, q)
    rep = EvidenceReport(q, n, seed, num_samples, format_tpoly(disc, p), disc_sq)
    disc_F = [F.from_prime_field(c) for c in disc]
    hist: Counter = Counter()
    for t0 in sample_t0(q, num_samples, seed):
        s = _sample(f, t0, F, disc_F)
        if not s.squarefree:
            continue
        rep.squarefree_samples += 1
        seq = s.degree_sequence
        hist[seq] += 1
        if s.coherent is False:
            rep.coherence_failures.append(t0)
        if s.parity == -1:
            rep.odd_type_seen = True
            rep.all_even = False
        if seq == (1,) * (n - 2) + (2,):
            rep.found_transposition_type = True
        if seq == (1,) * (n - p) + (p,) and n >= p:
            rep.found_p_cycle_type = True
        if seq == (n,):
            rep.found_n_cycle = True
    rep.histogram = dict(hist)
    if rep.squarefree_samples:
        if rep.disc_square and not rep.odd_type_seen:
            rep.verdict = "consistent_with_An"
        elif not rep.disc_square and rep.odd_type_seen:
            rep.verdict = "consistent_with_Sn"
    return rep


def _sample(f: BivarPoly, t0: int, F: GF, disc_F: list[int]) -> CycleTypeSample:
    g = specialize(f, t0, F)
    seq, sqfree = degree_sequence(g, F)
    if not sqfree:
        return CycleTypeSample(t0, None, False, None, None)
    dval = peval(F, disc_F, t0)
    return CycleTypeSample(t0, seq, True, parity(seq, f.degX), F.is_square(dval))


def sample_at(f: BivarPoly, t0: int, q: int) -> CycleTypeSample:
    F = gf_field(q)
    disc_F = [F.from_prime_field(c) for c in discriminant_x(f)]
    return _sample(f, t0, F, disc_F)

