"""Tests for the command-line front end: dispatch, formats, exit codes."""
import json

import pytest

from tljhecke.cli import main
from tljhecke.exactnum import cyc_from_json


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_dims_table(capsys):
    code, out = run(capsys, "dims", "--genus", "2", "--levels", "3,5,7,9,11,13")
    assert code == 0
    assert out.strip() == "5 14 30 55 91 140"


def test_dims_csv(capsys):
    code, out = run(capsys, "--format", "csv", "dims", "--levels", "2,3")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("level")
    assert lines[1].startswith("2,10")


def test_verify_pass_exit_zero(capsys):
    code, out = run(capsys, "verify", "--genus", "2", "--level", "3")
    assert code == 0
    assert "pass" in out and "FAIL" not in out


def test_verify_reports_twist_convention(capsys):
    code, out = run(capsys, "verify", "--genus", "2", "--level", "2")
    assert code == 0
    assert "i(i+2)" in out


def test_verify_fail_exit_code(capsys):
    # the alternate twist exponent breaks the relations
    code, out = run(capsys, "verify", "--genus", "2", "--level", "2",
                    "--twist", "minus")
    assert code == 3
    assert "FAIL" in out


def test_verify_both_genera(capsys):
    code, out = run(capsys, "verify", "--genus", "0", "--level", "2")
    assert code == 0
    assert "genus-1" in out and "genus-2" in out


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["verify"])   # missing --level
    assert exc.value.code == 2


def test_modular_data_json_roundtrip(capsys):
    code, out = run(capsys, "--format", "json", "modular-data", "--level", "2")
    assert code == 0
    doc = json.loads(out)
    s00 = cyc_from_json(doc["s_tilde"][0][0])
    assert s00 == 1
    d2 = cyc_from_json(doc["d_squared"])
    assert d2 == 4


def test_genus2_matrices_json(capsys):
    code, out = run(capsys, "--format", "json", "genus2-matrices", "--level", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["basis"] == [[0, 0, 0], [0, 2, 2], [2, 0, 2], [2, 2, 0], [2, 2, 2]]
    assert doc["positive_definite"] is True
    assert "j_unitary" in doc
    sq00 = cyc_from_json(doc["j_unitary"]["squares"][0][0])
    # (1/D^2)^2 = ((5-sqrt5)/10)^2
    assert abs(sq00.embed().real - ((5 - 5 ** 0.5) / 10) ** 2) < 1e-12


def test_genus2_matrices_raw(capsys):
    code, out = run(capsys, "--format", "json", "genus2-matrices", "--level", "3", "--raw")
    assert code == 0
    doc = json.loads(out)
    assert "jtilde" in doc and "j_unnormalized" in doc


def test_trace_table(capsys):
    code, out = run(capsys, "trace-table", "--levels", "3,5")
    assert code == 0
    assert "4.2361" in out and "10.5429" in out


def test_infinite_image_r3(capsys):
    code, out = run(capsys, "infinite-image", "--level", "3")
    assert code == 0
    assert "infinite" in out
    assert "not cyclotomic" in out


def test_hecke_word(capsys):
    code, out = run(capsys, "hecke-sl2", "--q", "5", "--word", "A B A^-1 J")
    assert code == 0
    assert "hyperbolic" in out


def test_hecke_presentation(capsys):
    code, out = run(capsys, "hecke-sl2", "--q", "7")
    assert code == 0
    assert "FAIL" not in out


def test_thurston_graph_file(tmp_path, capsys):
    f = tmp_path / "graph.txt"
    f.write_text("2 2\n1 0\n1 1\n1 1\n1 1\n")
    code, out = run(capsys, "thurston", "--graph", str(f))
    assert code == 0
    assert "Perron-Frobenius" in out


def test_spin_dims(capsys):
    code, out = run(capsys, "spin-dims", "--level", "6", "--genus", "2")
    assert code == 0
    assert "d^0 = 6" in out and "d^1 = 4" in out
    assert "(4, 60, 20)" in out


def test_spin_dims_not_applicable(capsys):
    code = main(["spin-dims", "--level", "3", "--genus", "2"])
    assert code == 2


def test_coefficients_json(capsys):
    code, out = run(capsys, "--format", "json", "coefficients", "--level", "2")
    assert code == 0
    doc = json.loads(out)
    assert cyc_from_json(doc["delta"]["0"]) == 1
    assert set(doc) >= {"delta", "twist", "theta", "tet", "sixj"}


def test_pretty_precision_agrees_with_embed(capsys):
    code, out = run(capsys, "--precision", "10", "genus2-matrices", "--level", "3")
    assert code == 0
    # first unitary entry (1,1) = (5 - sqrt5)/10 printed to 10 digits
    want = (5 - 5 ** 0.5) / 10
    first = out.splitlines()[2].split()[0]
    assert abs(float(first) - want) < 1e-10
