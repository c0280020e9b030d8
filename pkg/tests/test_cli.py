import json
import subprocess
import sys

import pytest

from arfs2.cli import main

R = "(5,0) (1,4) (0,5)"
RA = "(5,0) (1,4) (0,5) (9,6) (8,7) (4,11)"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_was2ify_golden_bytes(capsys):
    code, out = run(capsys, "was2ify", R, "--json")
    assert code == 0
    data = json.loads(out)
    assert data["gens"] == [[5, 0], [1, 4], [0, 5], [3, 7], [4, 6]]
    assert data["schema"] == "arf-s2/1" and data["wap"] == "true_within_bound"
    assert out == ('{"bound":60,"certified":true,"closure_added":[[4,11],[8,7],[9,6]],'
                   '"command":"was2ify","gens":[[5,0],[1,4],[0,5],[3,7],[4,6]],'
                   '"input":[[5,0],[1,4],[0,5]],"s2_added":[[3,7],[4,6]],"s2_fixed":true,'
                   '"schema":"arf-s2/1","wap":"true_within_bound"}\n')


def test_normalize_unchanged(capsys):
    code, out = run(capsys, "normalize", "(1,0) (0,1)", "--json")
    assert code == 0 and json.loads(out)["gens"] == [[1, 0], [0, 1]]


def test_normalize_golden(capsys):
    code, out = run(capsys, "normalize", "x^5, x*y^4, y^5", "--json")
    assert sorted(map(tuple, json.loads(out)["gens"])) == [(0, 5), (1, 4), (2, 3), (3, 2), (4, 1), (5, 0)]


def test_colon_and_upart(capsys):
    code, out = run(capsys, "colon", RA, "--a", "(0,10)", "--b", "(5,0)", "--json")
    d = json.loads(out)
    assert code == 0 and d["n"] == 1 and d["gens"] == [[0, 10], [3, 17], [4, 16]]
    code, out = run(capsys, "upart", RA, "--a", "y^10", "--json")
    assert json.loads(out)["gens"] == [[0, 10], [3, 17], [4, 16]]


def test_s2ify_and_conductor(capsys):
    code, out = run(capsys, "s2ify", RA, "--json", "--certify")
    d = json.loads(out)
    assert code == 0 and d["added"] == [[3, 7], [4, 6]] and d["certified"]
    code, out = run(capsys, "conductor", RA, "--json")
    assert json.loads(out)["conductor_element"] == [0, 10]


def test_wapcheck_exit_codes(capsys):
    code, out = run(capsys, "wapcheck", R, "--json")
    assert code == 0 and json.loads(out)["verdict"] == "false"
    code, out = run(capsys, "wapcheck", RA, "--json")
    assert code == 3 and json.loads(out)["verdict"] == "true_within_bound"


def test_arfclose(capsys):
    code, out = run(capsys, "arfclose", R, "--bound", "60", "--max-iter", "8", "--json")
    assert code == 0 and json.loads(out)["added"] == [[4, 11], [8, 7], [9, 6]]


def test_iteration_limit_exit_2(capsys):
    code, out = run(capsys, "arfclose", R, "--max-iter", "0", "--json")
    assert code == 2 and json.loads(out)["kind"] == "IterationLimit"


def test_parse_error_exit_1(capsys):
    code, out = run(capsys, "normalize", "(1,2", "--json")
    assert code == 1 and "error" in json.loads(out)
    code, out = run(capsys, "colon", R, "--a", "(2,3)", "--b", "(5,0)", "--json")
    assert code == 1
    code, out = run(capsys, "modcalc", "[x, 0]", "--a", "x", "--b", "y", "--char", "12", "--json")
    assert code == 1


def test_bound_env(capsys, monkeypatch):
    monkeypatch.setenv("ARFS2_BOUND", "70")
    code, out = run(capsys, "wapcheck", RA, "--json")
    assert json.loads(out)["bound"] == 70
    monkeypatch.setenv("ARFS2_BOUND", "5")
    code, out = run(capsys, "wapcheck", RA, "--json")
    assert code == 1


def test_modcalc(capsys):
    code, out = run(capsys, "modcalc", "[x, 0]; [y, x]; [0, y]", "--a", "x^2", "--b", "y^2", "--json")
    d = json.loads(out)
    assert code == 0 and d["equals_square_intersection"] and d["pair_regular"]
    assert d["numerator_basis"] == [["x^2*y^2", "0"], ["0", "x^2*y^2"]]


def test_stdin_and_text_output():
    p = subprocess.run([sys.executable, "-m", "arfs2", "normalize"], input="3 5",
                       capture_output=True, text=True)
    assert p.returncode == 0 and "gens: (1)" in p.stdout


def test_selftest_subset(capsys):
    code, out = run(capsys, "selftest", "--suite", "arf_closure_1d", "--json")
    d = json.loads(out)
    assert code == 0 and d["passed"] and list(d["suites"]) == ["arf_closure_1d"]
    code2, out2 = run(capsys, "selftest", "--suite", "arf_closure_1d", "--json")
    assert out == out2
