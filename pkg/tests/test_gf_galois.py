import random
from itertools import product

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from ffcheck.galois import degree_sequence, parity, sample_at, sample_evidence, sample_t0
from ffcheck.gf import GF, field, pdivmod, pmul
from ffcheck.polyring import TABLE_FAMILY, parse_poly

FIELDS = [3, 4, 5, 8, 9, 25, 27, 49, 243]


@given(st.sampled_from(FIELDS), st.data())
@settings(max_examples=300)
def test_field_axioms(q, data):
    F = field(q)
    a, b, c = (data.draw(st.integers(0, q - 1)) for _ in range(3))
    assert F.add(a, b) == F.add(b, a)
    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == 0
    if a:
        assert F.mul(a, F.inv(a)) == 1
    assert F.pow(a, q) == a


def test_field_structure():
    for q in FIELDS:
        F = field(q)
        units = [x for x in range(1, q)]
        assert sorted(F.mul(3 % q or 1, x) for x in units) == units
        # squares: exactly half the units for odd q, all of them for even q
        sq = {F.mul(x, x) for x in units}
        assert len(sq) == (q - 1 if q % 2 == 0 else (q - 1) // 2)
        assert all(F.is_square(x) == (x in sq) for x in units)
    with pytest.raises(ValueError):
        GF(12)


def naive_factors(f, F):
    """Monic irreducible factors with multiplicity, by trial division up to degree n/2."""
    out = []
    for d in range(1, (len(f) - 1) // 2 + 1):
        for tail in product(range(F.q), repeat=d):
            g = list(tail) + [1]
            while len(f) - 1 >= d:
                qt, r = pdivmod(F, f, g)
                if r:
                    break
                out.append(tuple(g))
                f = qt
    if len(f) > 1:
        out.append(tuple(f))
    return out


def test_degree_sequence_examples():
    F3, F5 = field(3), field(5)
    assert degree_sequence([1, 0, 1], F3) == ((2,), True)
    assert degree_sequence([4, 0, 1], F5) == ((1, 1), True)
    assert degree_sequence(pmul(F3, [1, 0, 1], [1, 1]), F3) == ((1, 2), True)
    assert degree_sequence([1, 2, 1], F3) == (None, False)
    assert degree_sequence([0, 0, 0, 1], F3) == (None, False)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_degree_sequence_vs_trial_division(q):
    F = field(q)
    for n in range(1, 5):
        for tail in product(range(q), repeat=n):
            f = list(tail) + [1]
            seq, sqfree = degree_sequence(f, F)
            facs = naive_factors(f, F)
            assert sqfree == (len(set(facs)) == len(facs))
            if sqfree:
                assert seq == tuple(sorted(len(g) - 1 for g in facs))


def test_degree_sequence_vs_sympy():
    x = sympy.Symbol("x")
    rng = random.Random(0)
    for q in (3, 5, 7, 11):
        for _ in range(200):
            n = rng.randint(2, 9)
            f = [rng.randrange(q) for _ in range(n)] + [1]
            seq, sqfree = degree_sequence(f, field(q))
            _, facs = sympy.Poly(list(reversed(f)), x, modulus=q).factor_list()
            assert sqfree == all(e == 1 for _, e in facs)
            if sqfree:
                assert seq == tuple(sorted(g.degree() for g, _ in facs))


def test_parity():
    assert parity((1, 1, 2), 4) == -1
    assert parity((4,), 4) == -1
    assert parity((1, 3), 4) == 1
    assert parity((2, 2), 4) == 1


def table_poly(p):
    return parse_poly(TABLE_FAMILY[p][0], p)


def test_sampling_is_seeded():
    assert sample_t0(7, 50, 1) == sample_t0(7, 50, 1)
    assert sample_t0(7, 50, 1) != sample_t0(7, 50, 2)
    a = sample_evidence(table_poly(5), 5, 50, seed=4).to_dict()
    b = sample_evidence(table_poly(5), 5, 50, seed=4).to_dict()
    assert a == b and a["seed"] == 4


def test_evidence_f7():
    rep = sample_evidence(table_poly(7), 7, 200, seed=0)
    assert rep.disc_square and not rep.odd_type_seen and rep.all_even
    assert rep.verdict == "consistent_with_An" and rep.coherent


def test_evidence_f5():
    rep = sample_evidence(table_poly(5), 5, 200, seed=0)
    assert not rep.disc_square and rep.odd_type_seen
    assert rep.verdict == "consistent_with_Sn" and rep.coherent


def test_evidence_f3():
    rep = sample_evidence(table_poly(3), 3, 200, seed=0)
    assert rep.found_n_cycle and (1, 3) in rep.histogram and rep.coherent


def test_evidence_extension_field():
    rep = sample_evidence(table_poly(3), 243, 300, seed=0)
    assert set(rep.histogram) == {(1, 1, 1, 1), (1, 1, 2), (2, 2), (1, 3), (4,)}
    assert rep.coherent and rep.found_transposition_type


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_pointwise_coherence_everywhere(p):
    f = table_poly(p)
    for t0 in range(p):
        s = sample_at(f, t0, p)
        assert s.coherent in (True, None)


def test_sampler_rejects_bad_input():
    with pytest.raises(ValueError):
        sample_evidence(parse_poly("2*X^2 + T", 5), 5)
    with pytest.raises(ValueError):
        sample_evidence(table_poly(5), 7)
