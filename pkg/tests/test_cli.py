import csv
import io
import json
import subprocess
import sys

import pytest

from ffcheck.cli import parse_sigma, run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_witness_json(capsys):
    code, out, _ = call(capsys, "witness", "--p", "17", "--sigma", "+1")
    assert code == 0 and json.loads(out) == {"p": 17, "sigma": 1, "a": 7}
    code, out, _ = call(capsys, "witness", "--p", "19", "--sigma", "-1")
    assert json.loads(out)["a"] == 9


def test_sigma_parsing():
    assert parse_sigma("+1") == 1 and parse_sigma("-1") == -1
    with pytest.raises(Exception):
        parse_sigma("2")


def test_usage_errors_exit_2(capsys):
    assert call(capsys, "witness", "--p", "17", "--bogus")[0] == 2
    assert call(capsys, "nope")[0] == 2
    assert call(capsys, "witness", "--p", "17", "--sigma", "0")[0] == 2
    assert call(capsys, "witness", "--p", "15", "--sigma", "+1")[0] == 2
    assert call(capsys, "search", "--hi", "1000", "--threads", "0")[0] == 2
    code, _, err = call(capsys, "disc", "--family", "mtr", "--p", "7")
    assert code == 2 and "--a" in err


def test_bounds_table_csv(capsys):
    code, out, _ = call(capsys, "bounds-table", "--n-max", "12", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and rows[0] == ["n", "l", "s", "R", "L"] and len(rows) == 13
    assert rows[12] == ["12", "2", "10", "1097.213", "88920.402"]


def test_out_file(tmp_path, capsys):
    path = tmp_path / "t.csv"
    code, out, _ = call(capsys, "bounds-table", "--n-max", "1", "--format", "csv", "--out", str(path))
    assert code == 0 and out == ""
    assert path.read_text().splitlines() == ["n,l,s,R,L", "1,0,1,8,0.835"]


def test_search_schema_and_exit(capsys):
    code, out, _ = call(capsys, "search", "--lo", "13", "--hi", "100", "--threads", "1")
    d = json.loads(out)
    assert code == 0
    assert d["range"] == {"lo": 13, "hi": 100} and d["mode"] == "full"
    assert d["primes_checked"] == 19 and d["counterexamples"] == []
    assert set(d["max_min_witness"]) == {"p", "sigma", "a"}
    assert isinstance(d["elapsed_ms"], int)
    assert sum(d["omega_histogram"].values()) == 19


def test_check_failures_exit_1(capsys):
    # the stated thresholds do not clear the worst case at 7e7
    code, out, _ = call(capsys, "thresholds")
    assert code == 1 and json.loads(out)["passed"] is False
    code, out, _ = call(capsys, "disc", "--poly", "X^4 + X + T", "--p", "3")
    assert code == 1 and json.loads(out)["hypotheses_verified"] is False


def test_passing_checks_exit_0(capsys):
    for argv in (
        ["large-omega"],
        ["charsum", "--p", "101", "--sigma", "-1"],
        ["identity", "--lo", "13", "--hi", "200"],
        ["disc"],
        ["disc", "--family", "mtr"],
        ["disc", "--family", "new", "--p", "7"],
        ["galois", "--p", "7", "--samples", "50"],
    ):
        code, out, _ = call(capsys, *argv)
        assert code == 0, argv
        json.loads(out)


def test_text_format(capsys):
    code, out, _ = call(capsys, "charsum", "--p", "17", "--sigma", "+1", "--d", "1", "--format", "text")
    assert code == 0 and "N_d: 7" in out and "xi_d: -2" in out


def test_galois_embeds_seed(capsys):
    _, out, _ = call(capsys, "galois", "--p", "5", "--samples", "20", "--seed", "123456789012")
    assert json.loads(out)["seed"] == 123456789012


def test_module_entry_point():
    r = subprocess.run(
        [sys.executable, "-m", "ffcheck", "witness", "--p", "17", "--sigma", "-1"], capture_output=True, text=True
    )
    assert r.returncode == 0 and json.loads(r.stdout)["a"] == 5
    r = subprocess.run([sys.executable, "-m", "ffcheck", "--unknown"], capture_output=True, text=True)
    assert r.returncode == 2 and "usage" in r.stderr
