from __future__ import annotations

import json

import pytest

from strongclique.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def c5_file(tmp_path):
    p = tmp_path / "c5.mg"
    p.write_text("mg 5\ne 0 1 1\ne 1 2 1\ne 2 3 1\ne 3 4 1\ne 0 4 1\n")
    return p


def test_construct_then_solve(tmp_path, capsys):
    out = tmp_path / "g45.mg"
    code, _, _ = run(capsys, "construct", "--family", "gkd", "--k", "4", "--delta", "5", "-o", str(out))
    assert code == 0 and out.read_text().startswith("# claims")
    code, text, _ = run(capsys, "solve", str(out), "--chromatic")
    data = json.loads(text)
    assert data["strong_clique"] == 12 and data["strong_chromatic_index"] == 12
    assert data["max_degree"] == 5


def test_solve_fractional(c5_file, capsys):
    code, text, _ = run(capsys, "solve", str(c5_file), "--fractional")
    assert code == 0
    assert json.loads(text)["fractional_strong_chromatic_index"] == "5/1"


def test_k4color(c5_file, capsys, tmp_path):
    code, text, _ = run(capsys, "k4color", str(c5_file))
    assert code == 0 and json.loads(text)["colours"] == 5
    sub = tmp_path / "a.txt"
    sub.write_text("e 0 1 1\ne 2 3 1\n")
    code, text, _ = run(capsys, "k4color", str(c5_file), "--subset", str(sub))
    assert code == 0 and len(json.loads(text)["assignment"]) == 2


def test_k4color_rejects_k4(tmp_path, capsys, caplog):
    p = tmp_path / "k4.mg"
    p.write_text("mg 4\ne 0 1 1\ne 0 2 1\ne 0 3 1\ne 1 2 1\ne 1 3 1\ne 2 3 1\n")
    code, _, err = run(capsys, "k4color", str(p))
    assert code == 2 and "precondition" in caplog.text


def test_decompose(tmp_path, capsys):
    p = tmp_path / "w.txt"
    p.write_text("w 0 1 3\nw 1 2 1\nw 0 2 1\n")
    code, text, _ = run(capsys, "decompose", str(p))
    data = json.loads(text)
    assert code == 0 and data["delta"] == "4/1" and len(data["parts"]) == 2


def test_fractional(c5_file, capsys):
    code, text, _ = run(capsys, "fractional", str(c5_file), "--lam", "5/2", "--trend")
    data = json.loads(text)
    assert code == 0
    assert data["total"] == "5/1" and data["certificate"]["within_bound"]
    assert [r["ratio"] for r in data["finite_d_trend"]] == ["5/1"] * 3


def test_bad_input_exit_code(tmp_path, capsys, caplog):
    p = tmp_path / "bad.mg"
    p.write_text("mg 2\ne 0 0 1\n")
    code, _, err = run(capsys, "solve", str(p))
    assert code == 2 and "loop" in caplog.text


def test_verify_claim(capsys, tmp_path):
    js = tmp_path / "r.json"
    code, text, _ = run(capsys, "verify", "--claim", "construction_formulas", "--json", str(js))
    assert code == 0
    assert "FINDING" in text
    assert json.loads(js.read_text())


def test_verify_unknown_claim(capsys):
    code, _, err = run(capsys, "verify", "--claim", "nope")
    assert code == 2
