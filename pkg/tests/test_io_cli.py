import csv
import io
import json

import pytest

from galois_locus.cli import EXIT_CAP, EXIT_INPUT, EXIT_OK, EXIT_UNSUPPORTED, main
from galois_locus.io import (CSV_COLUMNS, SCHEMA_VERSION, RunConfig, parse_header,
                             read_curve_text)
from galois_locus.parametrized import RationalMap
from galois_locus.polys import ParseError

HERM = "# hermitian\np=3 k=2\nX^3*Z + X*Z^3 - Y^4\n"
BH_PARAM = "p=3 k=1\ns^4 | (s+t)^4 | t^4  # ballico-hefez\n"


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_header():
    F = parse_header("p=3 k=2")
    assert F.q == 9 and F.modulus_str() == "x^2+1"
    G = parse_header("p=2 k=3 modulus=x^3+x^2+1")
    assert G.modulus_str() == "x^3+x^2+1"
    with pytest.raises(ParseError):
        parse_header("q=9")
    with pytest.raises(ParseError):
        parse_header("p=2 k=2 modulus=x^2+1")  # reducible


def test_read_curve_text():
    C = read_curve_text(HERM, "implicit")
    assert C.degree == 4 and len(C.rational_points()) == 28
    pi = read_curve_text(BH_PARAM, "param")
    assert isinstance(pi, RationalMap) and pi.degree == 4


@pytest.mark.parametrize("text,line", [
    ("p=3 k=1\nX^2 + Y\n", 2),
    ("p=3 k=1\n\nX^2 + * Y\n", 3),
    ("p=3 k=1\nX + Y\nZ\n", 3),
    ("", 1),
    ("p=3\nX\n", 1),
])
def test_parse_errors_carry_positions(text, line):
    with pytest.raises(ParseError) as err:
        read_curve_text(text, "implicit")
    assert err.value.line == line and err.value.column >= 1


def test_param_parse_errors():
    with pytest.raises(ParseError):
        read_curve_text("p=3 k=1\ns^2 | t^2\n", "param")
    with pytest.raises(ParseError) as err:
        read_curve_text("p=3 k=1\ns^2 | t^2 | s*t*t\n", "param")
    assert err.value.line == 2


def test_run_config_validation():
    RunConfig("galois", curve="klein")
    for bad in [dict(), dict(curve="klein", poly_file="x"), dict(curve="klein", m_max=0),
                dict(curve="klein", threads=0), dict(curve="klein", fmt="xml"),
                dict(curve="klein", caps={"search_field_order": 0})]:
        with pytest.raises(ValueError):
            RunConfig("galois", **bad)


def test_cli_galois_bh3_json(capsys):
    code, out, _ = run_cli(capsys, "galois", "--curve", "ballico-hefez", "--q", "3",
                           "--mmax", "2", "--format", "json")
    assert code == EXIT_OK
    rep = json.loads(out)
    assert rep["schema_version"] == SCHEMA_VERSION
    assert rep["header"]["field"] == {"p": 3, "k": 1, "q": 3, "modulus": "x"}
    assert rep["header"]["m_max"] == 2
    assert len(rep["rows"]) == 13
    assert all(r["verdict"] == "GALOIS" for r in rep["rows"])
    assert rep["summary"]["locus_is_plane"] is True


def test_cli_output_is_byte_stable(capsys, tmp_path):
    args = ["galois", "--curve", "klein", "--format", "json"]
    _, a, _ = run_cli(capsys, *args)
    _, b, _ = run_cli(capsys, *args, "--threads", "3")
    assert a == b
    out = tmp_path / "k.json"
    assert main(args + ["--out", str(out)]) == EXIT_OK
    assert out.read_text() == a


def test_cli_csv(capsys):
    code, out, _ = run_cli(capsys, "galois", "--curve", "klein", "--format", "csv")
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == CSV_COLUMNS and len(rows) == 7
    assert {r["verdict"] for r in rows} == {"GALOIS"}
    assert {r["automorphisms"] for r in rows} == {"4"}


def test_cli_text(capsys):
    code, out, _ = run_cli(capsys, "galois", "--curve", "ballico-hefez", "--q", "3",
                           "--mmax", "2")
    assert code == EXIT_OK
    assert "locus_is_plane=True" in out and out.count("GALOIS (deck-count)") == 13


def test_cli_analyze(capsys):
    code, out, _ = run_cli(capsys, "analyze", "--curve", "hermitian", "--q", "9",
                           "--format", "json")
    rep = json.loads(out)
    assert code == EXIT_OK and rep["degree"] == 4 and rep["rational_points"] == 28
    assert set(rep["tangency"].values()) == {4} and rep["smooth"]
    code, out, _ = run_cli(capsys, "analyze", "--curve", "ballico-hefez", "--q", "3",
                           "--format", "json")
    rep = json.loads(out)
    assert [s["multiplicity"] for s in rep["singular_points"]] == [2, 2, 2]


def test_cli_files(capsys, tmp_path):
    poly = tmp_path / "herm.txt"
    poly.write_text(HERM)
    code, out, _ = run_cli(capsys, "galois", "--poly-file", str(poly), "--mmax", "1",
                           "--format", "json")
    assert code == EXIT_OK and json.loads(out)["summary"]["counts"]["GALOIS"] == 91
    par = tmp_path / "bh.txt"
    par.write_text(BH_PARAM)
    code, out, _ = run_cli(capsys, "galois", "--param-file", str(par), "--mmax", "2")
    assert code == EXIT_OK and "locus_is_plane=True" in out
    code, out, _ = run_cli(capsys, "analyze", "--param-file", str(par))
    assert code == EXIT_OK and "singular point" in out


def test_cli_exit_codes(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("p=3 k=1\nX^2 + * Y\n")
    code, _, err = run_cli(capsys, "analyze", "--poly-file", str(bad))
    assert code == EXIT_INPUT and "line 2" in err and "column" in err
    code, _, err = run_cli(capsys, "galois", "--poly-file", str(tmp_path / "missing.txt"))
    assert code == EXIT_INPUT
    cusp = tmp_path / "cusp.txt"
    cusp.write_text("p=5 k=1\nY^3 - X*Z^2\n")
    code, _, err = run_cli(capsys, "galois", "--poly-file", str(cusp))
    assert code == EXIT_UNSUPPORTED and "singular" in err
    code, _, err = run_cli(capsys, "galois", "--curve", "klein", "--search-cap", "1")
    assert code == EXIT_CAP
    code, _, _ = run_cli(capsys, "galois", "--curve", "klein", "--mmax", "0")
    assert code == EXIT_INPUT
    code, _, _ = run_cli(capsys, "galois", "--curve", "hermitian", "--q", "4")
    assert code == EXIT_INPUT


def test_cli_verify_facts(capsys):
    code, out, _ = run_cli(capsys, "verify-facts", "--curve", "ballico-hefez", "--q", "3")
    assert code == EXIT_OK
    assert "# overall: PASS" in out and "[FAIL]" not in out
    code, out, _ = run_cli(capsys, "verify-facts", "--curve", "klein", "--format", "json")
    assert code == EXIT_OK and json.loads(out)["passed"] is True
