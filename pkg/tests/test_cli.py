import json
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from homersenne.bfile import bfile_terms, format_bfile, parse_bfile
from homersenne.cli import main
from homersenne.sequences import hom_stream


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_bfile(capsys):
    code, out, _ = run(capsys, "gen", "--k", "2", "--count", "6", "--format", "bfile")
    assert code == 0
    assert out == "0 0\n1 1\n2 5\n3 21\n4 85\n5 341\n"


def test_gen_csv(capsys):
    code, out, _ = run(capsys, "gen", "--k", "1", "--count", "4", "--format", "csv")
    assert code == 0 and out == "0,0\n1,1\n2,3\n3,7\n"


def test_gen_single_row_table(capsys):
    code, out, _ = run(capsys, "gen", "--k", "5", "--count", "1")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2 and lines[1].split() == ["0", "0"]


def test_gen_json(capsys):
    code, out, _ = run(capsys, "gen", "--k", "3", "--count", "4", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"k": 3, "name": "higher_order_mersenne", "terms": ["0", "1", "9", "73"]}


def test_gen_is_deterministic(capsys):
    first = run(capsys, "gen", "--k", "7", "--count", "30")
    assert run(capsys, "gen", "--k", "7", "--count", "30") == first


@pytest.mark.parametrize(
    "argv",
    [
        ["gen", "--k", "0", "--count", "3"],
        ["gen", "--k", "2", "--count", "0"],
        ["gen", "--k", "2", "--count", "3", "--format", "xml"],
        ["matrix", "--k", "2", "--n", "0"],
        ["tridiag", "--k", "1", "--n", "0"],
        ["verify", "--identity", "nonsense"],
        ["verify", "--k-max", "0"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_verify_single_cassini(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "cassini", "--k-max", "1", "--n-max", "1")
    assert code == 0
    assert "cassini  PASS  1/1" in out


def test_verify_vajda_header(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "vajda", "--k-max", "3", "--n-max", "4")
    assert code == 0
    assert "vajda convention: standard/+/q^r-1" in out
    assert "75/375" in out
    assert "vajda  PASS  375/375" in out


def test_verify_grid_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "--k-max", "4", "--n-max", "32")
    assert code == 0
    assert "FAIL" not in out and out.endswith("all identities hold\n")


def test_verify_failure_exit_1(capsys, monkeypatch):
    from homersenne import identities
    from homersenne import verify as v

    def printed(k_max, n_max):
        yield identities.vajda(1, 1, 1, 1, convention=identities.PRINTED_VAJDA)

    monkeypatch.setitem(v.IDENTITIES, "vajda", printed)
    code, out, _ = run(capsys, "verify", "--identity", "vajda", "--k-max", "1", "--n-max", "1")
    assert code == 1
    assert "counterexample: vajda[standard/-/q^r+1](k=1, n=1, m=1, r=1): lhs=2 rhs=-6" in out


@pytest.mark.parametrize(
    "k, values",
    [(3, [0, 1, 11, 103, 935, 8431]), (5, [0, 1, 35, 1159, 38255, 1262431]), (1, [0, 1])],
)
def test_transform(capsys, k, values):
    code, out, _ = run(capsys, "transform", "--k", str(k), "--count", str(len(values)), "--format", "bfile")
    assert code == 0
    assert [v for _, v in parse_bfile(out)] == values


def test_transform_detects_disagreement(capsys, monkeypatch):
    from homersenne import transforms

    monkeypatch.setattr(transforms, "bt_closed", lambda k, n: -1)
    code, _, err = run(capsys, "transform", "--k", "2", "--count", "3")
    assert code == 1 and "disagree" in err


@pytest.mark.parametrize(
    "which, den, coeffs",
    [("base", "[1, -3, 2]", "0 1 3 7 15"), ("transform", "[1, -5, 6]", "0 1 5 19 65")],
)
def test_genfun(capsys, which, den, coeffs):
    code, out, _ = run(capsys, "genfun", "--k", "1", "--count", "5", "--which", which)
    assert code == 0
    assert f"denominator: {den}" in out and f"coefficients: {coeffs}" in out


def test_genfun_single(capsys):
    _, out, _ = run(capsys, "genfun", "--k", "2", "--count", "1", "--which", "base")
    assert "coefficients: 0\n" in out


def test_matrix(capsys):
    code, out, _ = run(capsys, "matrix", "--k", "2", "--n", "3")
    assert code == 0
    assert "= -20\n" in out and "= 21\n" in out and "= -84\n" in out and "= 85\n" in out
    assert "det = 64 " in out and "trace = 65 " in out


def test_matrix_small(capsys):
    _, out, _ = run(capsys, "matrix", "--k", "1", "--n", "1")
    assert "det = 2 " in out and "trace = 3 " in out
    _, out, _ = run(capsys, "matrix", "--k", "3", "--n", "2")
    assert "det = 64 " in out and "trace = 65 " in out


@pytest.mark.parametrize("k, n, chain", [(2, 3, [5, 21, 85]), (1, 1, [3]), (3, 4, [9, 73, 585, 4681])])
def test_tridiag(capsys, k, n, chain):
    code, out, _ = run(capsys, "tridiag", "--k", str(k), "--n", str(n))
    assert code == 0
    dets = [int(line.split("=")[1]) for line in out.splitlines() if line.startswith("det(")]
    assert dets == chain
    assert f"trace(V_{n}) = {n * (2**k + 1)}" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "homersenne", "gen", "--k", "1", "--count", "3", "--format", "csv"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "0,0\n1,1\n2,3\n"


# --- b-file format -------------------------------------------------------------


@given(st.integers(1, 8), st.integers(1, 80))
def test_bfile_round_trip(k, count):
    terms = hom_stream(k, count)
    assert [v for _, v in parse_bfile(format_bfile(terms))] == terms


def test_bfile_ignores_comments_and_blanks():
    assert parse_bfile("# A000225\n\n0 0\n1 1\n") == [(0, 0), (1, 1)]


@pytest.mark.parametrize("text", ["0 1 2\n", "0 0\n2 3\n", "x y\n"])
def test_bfile_rejects_malformed(text):
    with pytest.raises(ValueError):
        parse_bfile(text)


def test_bfile_offset_check(fixture_path):
    with pytest.raises(ValueError):
        bfile_terms(fixture_path("b000225.txt"), offset=1)


def test_big_values_print(capsys):
    # well past the default 4300-digit int/str conversion limit
    code, out, _ = run(capsys, "gen", "--k", "16", "--count", "1000", "--format", "bfile")
    assert code == 0
    last = out.splitlines()[-1].split()
    assert int(last[0]) == 999 and len(last[1]) > 4300
