import json

import pytest

from kkschur.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_quotient_example(capsys):
    code, out, _ = run(capsys, "quotient", "--k", "3", "--num", "2,2,1", "--den", "2,2")
    assert code == 0
    data = json.loads(out)
    assert data["basis"] == "KKSCHUR"
    assert data["terms"] == [{"index": [1], "coeff": "1"}, {"index": [], "coeff": "1"}]


def test_core_example(capsys):
    assert run(capsys, "core", "--k", "3", "--lambda", "2,2,1")[1].strip() == "[3,2,1]"


def test_multiply_empty(capsys):
    code, out, _ = run(capsys, "multiply", "--k", "3", "--f-empty", "--g-empty")
    assert json.loads(out)["terms"] == [{"index": [], "coeff": "1"}]


def test_round_trip_json_input(capsys):
    _, out, _ = run(capsys, "expand", "--k", "3", "--lambda", "1,1", "--from", "h", "--to", "kkschur")
    code, again, _ = run(capsys, "multiply", "--k", "3", "--f", out.strip(), "--g-empty")
    assert code == 0 and json.loads(again) == json.loads(out)


def test_quotient_by_rectangles(capsys):
    code, out, _ = run(capsys, "quotient", "--k", "3", "--P", "1,2,3", "--lambda", "2,1,1", "--pretty")
    assert out.strip() == "g[2,1,1] + 2*g[3] + 3*g[2,1] + 2*g[1,1,1] + 5*g[2] + 5*g[1,1] + 8*g[1] + 9*g[0]"


def test_not_divisible_exit_1(capsys):
    code, _, err = run(capsys, "quotient", "--k", "3", "--num", "2,1", "--den", "2,2")
    assert code == 1
    data = json.loads(err)
    assert data["error"] == "NotDivisible" and data["residual"]["terms"]


def test_usage_errors_exit_2(capsys):
    code, _, err = run(capsys, "core", "--k", "3", "--lambda", "4,1")
    assert code == 2 and json.loads(err)["error"] == "NotKBounded"
    with pytest.raises(SystemExit) as e:
        main(["core", "--lambda", "1"])
    assert e.value.code == 2
    assert run(capsys, "verify", "--k", "5")[0] == 2
    assert run(capsys, "verify", "--k", "3", "--statement", "NOPE")[0] == 2
    assert run(capsys, "bdd", "--k", "3", "--core", "4")[0] == 2


def test_simple_verbs(capsys):
    assert json.loads(run(capsys, "bdd", "--k", "3", "--core", "5,2")[1]) == [3, 2]
    assert json.loads(run(capsys, "word", "--k", "3", "--lambda", "2,1")[1]) == [3, 1, 0]
    assert run(capsys, "pieri", "--k", "3", "--lambda", "2,2", "--r", "1", "--pretty")[1].strip() == "g[2,2,1] - g[2,2]"
    assert json.loads(run(capsys, "minindex", "--k", "3", "--lambda", "2,1,1,1", "--t", "2")[1]) == \
        {"mu": [1, 1, 1, 1], "core": [2, 1, 1, 1]}


def test_verify_and_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--k", "3", "--statement", "P_FACTOR", "--max-size", "4")
    assert code == 0 and json.loads(out)[0]["counterexamples"] == []
    code, _, _ = run(capsys, "verify", "--k", "3", "--statement", "CONJ_MININDEX_MONOTONE")
    assert code == 1


def test_scan_strict_and_resume(capsys, tmp_path):
    report = str(tmp_path / "r.jsonl")
    code, out, _ = run(capsys, "scan", "--k", "2", "--report", report, "--statement", "CONJ_POSITIVITY",
                       "--statement", "CONJ_INTERVAL", "--strict")
    assert code == 0 and json.loads(out)["report"] == report
    code, _, _ = run(capsys, "scan", "--k", "2", "--report", report, "--statement", "CONJ_MININDEX_MONOTONE",
                     "--strict")
    assert code == 1


def test_scan_default_report_uses_cache_dir(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("KKSCHUR_CACHE_DIR", str(tmp_path / "cache"))
    code, out, _ = run(capsys, "scan", "--k", "2", "--statement", "CONJ_INTERVAL", "--max-size", "3")
    assert code == 0
    assert json.loads(out)["report"].startswith(str(tmp_path / "cache"))


def test_table_and_dot_verbs(capsys, tmp_path):
    code, out, _ = run(capsys, "table1", "--k", "3")
    assert code == 0 and len(out.splitlines()) == 36
    code, out, _ = run(capsys, "table2", "--k", "3", "--max-size", "6", "--json")
    assert len(json.loads(out)) == 23
    dot = tmp_path / "p.dot"
    assert run(capsys, "poset-dot", "--k", "3", "--max-size", "6", "-o", str(dot))[0] == 0
    assert dot.read_text().count("--") == 39
