from __future__ import annotations

import json

import pytest

from qaknot.cli import main, parse_input, scan_rows, write_table
from qaknot.corpus import TableRow


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_jones_of_braid(capsys):
    code, out, _ = run(capsys, "jones", "1 1 1")
    assert code == 0 and out.strip() == "-1*t^4 + 1*t^3 + 1*t^1"


def test_empty_three_braid_reports_trace_formula(capsys):
    code, out, _ = run(capsys, "jones", "", "--strands", "3")
    assert code == 0
    assert out.splitlines() == ["1*t^1 + 2 + 1*t^-1", "trace formula: 1*t^1 + 2 + 1*t^-1 (agrees)"]


def test_json_output_and_file(capsys, tmp_path):
    target = tmp_path / "out.json"
    code, out, _ = run(capsys, "det", "1 -2 1 -2", "--format", "json", "--output", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text()) == {"det": 5}


def test_input_from_file_and_mirror(capsys, tmp_path):
    f = tmp_path / "k.pd"
    f.write_text("X(1,3,4,2) X(3,5,6,4) X(5,1,2,6) ORIENT(+1,+1,+1)\n")
    _, out, _ = run(capsys, "jones", str(f), "--mirror")
    assert out.strip() == "1*t^-1 + 1*t^-3 - 1*t^-4"


def test_bracket_engines(capsys):
    _, a, _ = run(capsys, "bracket", "1 1 -2 1", "--engine", "state_sum")
    _, b, _ = run(capsys, "bracket", "1 1 -2 1", "--engine", "skein_memo")
    assert a == b


def test_montesinos_det_and_qa(capsys):
    assert run(capsys, "det", "M(-1; 2/1, 3/1, 3/1)")[1].strip() == "39"
    _, out, _ = run(capsys, "qa", "M(0; 2/1, 3/1, 7/2)")
    assert out.strip() == "QA: yes (e <= 0); standard form M(0; 2/1, 3/1, 7/2)"
    _, out, _ = run(capsys, "qa", "M(1; 3/1, 3/1, 3/1)")
    assert out.startswith("QA: no (no condition holds)")


def test_qa_normal_form_and_search(capsys):
    _, out, _ = run(capsys, "qa", "type2 n=1 m=-2")
    assert out.startswith("QA: yes (type2 requires")
    _, out, _ = run(capsys, "qa", "1 1")
    assert out.strip() == "QA: yes, certificate depth 1 (crossing 0: 2 = 1 + 1)"
    _, out, _ = run(capsys, "qa", "1 -1")
    assert out.startswith("QA: inconclusive")


def test_gaps(capsys):
    _, out, _ = run(capsys, "gaps", "1 1 1")
    assert "gaps: [1]" in out and "strictly alternating: no" in out


def test_twist(capsys):
    code, out, _ = run(capsys, "twist", "1 -2 1 -2", "-n", "3")
    assert code == 0
    assert "det: 11 (predicted 11: ok)" in out
    assert "gaps: none" in out
    code, _, err = run(capsys, "twist", "1 -2 1 -2", "--crossing", "1")
    assert code == 2 and "mirror" in err
    assert run(capsys, "twist", "1 1", "--crossing", "5")[0] == 2


@pytest.mark.parametrize("bad", ["X(1,2,3,4)", "X(1,2,3", "M(0; 2/1, q)", "type9 n=1", "1 x 2"])
def test_bad_input_exit_code(capsys, bad):
    code, out, err = run(capsys, "jones", bad)
    assert code == 2 and out == "" and err.startswith("error:")


def test_missing_file_is_input_error(capsys, tmp_path):
    assert run(capsys, "scan", str(tmp_path / "missing.csv"))[0] == 2


def test_parse_input_detection():
    assert parse_input("1 -2 1").kind == "braid"
    assert parse_input("M(0; 2/1, 3/1, 3/1)").kind == "montesinos"
    assert parse_input("type1 n=0 pairs=1:1").kind == "normal_form"
    assert parse_input("X(1,1,2,2)").kind == "pd"


# ---- scan ----------------------------------------------------------------


def test_scan_empty_table(capsys, tmp_path):
    f = tmp_path / "empty.csv"
    write_table([], str(f))
    code, out, _ = run(capsys, "scan", str(f))
    assert code == 0 and "rows=0" in out


def test_scan_dry_run_flags_planted_candidate(capsys, tmp_path):
    rows = [
        TableRow("fake", "", 3, "yes", "yes", "-1*t^4 + 1*t^3 + 1*t^1", "no"),
        TableRow("4_1", "", 4, "yes", "yes", "1*t^2 - 1*t^1 + 1 - 1*t^-1 + 1*t^-2", "no"),
    ]
    f = tmp_path / "fake.csv"
    write_table(rows, str(f))
    code, out, _ = run(capsys, "scan", str(f), "--dry-run")
    assert code == 1
    assert "fake: counterexample-candidate" in out and "4_1: consistent" in out


def test_scan_computes_and_checks_expected(capsys, tmp_path):
    rows = [
        {"name": "3_1", "pd": "X(1,3,4,2) X(3,5,6,4) X(5,1,2,6)", "crossing_number": 3,
         "qa_status": "yes", "prime": "yes", "jones_expected": "-1*t^4 + 1*t^3 + 1*t^1"},
        {"name": "bad", "pd": "X(1,2,3", "crossing_number": 0, "qa_status": "yes", "prime": "yes",
         "jones_expected": ""},
    ]
    f = tmp_path / "t.json"
    write_table(rows, str(f))
    code, out, _ = run(capsys, "scan", str(f), "--format", "json")
    report = json.loads(out)
    assert code == 0
    (r,) = report["results"]
    assert r["verdict"] == "out-of-scope" and r["torus_source"] == "jones-screen" and r["jones_match"]
    assert report["errors"][0]["row"] == 2


def test_scan_is_deterministic():
    rows = [{"name": "x", "pd": "X(1,3,4,2) X(3,5,6,4) X(5,1,2,6)", "qa_status": "yes", "prime": "yes"}]
    assert scan_rows(rows) == scan_rows(rows)


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0 and out.count("PASS") == 3
