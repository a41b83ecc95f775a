import csv
import io
import json
import math
from fractions import Fraction

import pytest

from ffcheck.bounds import (
    L_bound,
    R_bound,
    R_exact,
    best_R,
    bounds_table,
    check_large_omega_lemma,
    table_csv,
    table_json,
    truncate3,
    verify_thresholds,
)

# rows (n, l, s, R, L) of the published table, truncated to 3 decimals
PUBLISHED = [
    ("1", "0", "1", "8", "0.835"),
    ("2", "1", "1", "24", "0.877"),
    ("3", "1", "2", "51.428", "1.244"),
    ("4", "1", "3", "98.823", "2.283"),
    ("5", "2", "3", "169.541", "5.495"),
    ("6", "2", "4", "245.242", "15.322"),
    ("7", "2", "5", "334.504", "50.519"),
    ("8", "2", "6", "444.614", "182.262"),
    ("9", "2", "7", "574.201", "738.575"),
    ("10", "2", "8", "720.253", "3409.625"),
    ("11", "2", "9", "896.738", "16571.694"),
    ("12", "2", "10", "1097.213", "88920.402"),
]


def test_table_matches_published_rows():
    rows = bounds_table(12)
    assert [tuple(r.cells()) for r in rows] == PUBLISHED


def test_single_row():
    assert [tuple(r.cells()) for r in bounds_table(1)] == [PUBLISHED[0]]


def test_csv_and_json_outputs():
    rows = bounds_table(12)
    parsed = list(csv.reader(io.StringIO(table_csv(rows))))
    assert parsed[0] == ["n", "l", "s", "R", "L"]
    assert [tuple(r) for r in parsed[1:]] == PUBLISHED
    js = json.loads(table_json(rows))
    assert [(str(r["n"]), r["R_truncated"]) for r in js][:3] == [("1", "8"), ("2", "24"), ("3", "51.428")]


def test_R_L_examples():
    assert R_bound(0, 1) == 8
    assert math.floor(L_bound(0, 1) * 1000) == 835
    assert R_exact(2, 3) == Fraction(18480, 109)
    assert math.floor(R_bound(2, 10) * 1000) == 1097213
    assert math.floor(L_bound(2, 10) * 1000) == 88920402


def test_R_oracle():
    # direct formula with floats: (s+1) 2^(l+1) / ((1 - sum 1/p_i) prod(1 - 1/q_j))
    ps = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41]
    for l in range(4):
        for s in range(1, 8):
            delta = 1 - sum(1 / x for x in ps[l : l + s])
            r = R_bound(l, s)
            if delta <= 0:
                assert r is None
            else:
                want = (s + 1) * 2 ** (l + 1) / (delta * math.prod(1 - 1 / x for x in ps[:l]))
                assert r == pytest.approx(want, rel=1e-12)


def test_best_R():
    assert best_R(2) == (1, 24)
    l, r = best_R(5)
    assert l == 2 and truncate3(r) == Fraction(169541, 1000)
    l, r = best_R(8)
    assert l == 2 and truncate3(r) == Fraction(444614, 1000)
    with pytest.raises(ValueError):
        best_R(0)


def test_large_omega_lemma():
    rep = check_large_omega_lemma()
    assert rep.N0 == 304250263527210
    assert rep.phi_N0 == math.prod(x - 1 for x in [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41])
    assert rep.ratio_at_11 == pytest.approx(1.0109, abs=1e-4)
    assert rep.passed


def test_threshold_components():
    rep = verify_thresholds()
    assert rep.max_best_R_upto8 == pytest.approx(444.614, abs=1e-3)
    assert rep.max_best_R_upto5 == pytest.approx(169.541, abs=1e-3)
    assert rep.small_omega_clears is True
    assert rep.monotone_on_grid
    # natural-log value at 7e7 sits below the largest worst-case R
    assert rep.f_search_limit == pytest.approx(438.869, abs=1e-3)
    assert rep.search_limit_clears is False
