import json

import pytest

from chevlie.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_info_text(capsys):
    code, out, err = run(capsys, "info", "G2")
    assert code == 0
    assert "rank 2, dimension 14" in out
    assert "3^7 on g" in out


def test_info_machine_document(capsys):
    code, out, _ = run(capsys, "info", "E8", "--machine")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema_version"] == 1
    assert doc["command"] == "info"
    assert doc["request"] == {"type": "E8"}
    payload = doc["payload"]
    assert payload["dim"] == 248
    assert payload["dual_coxeter"] == 30
    assert payload["det_gram"] == {"string": "1", "sign": 1, "factors": []}


def test_machine_output_is_deterministic(capsys):
    _, first, _ = run(capsys, "parahoric", "F4", "--node", "all",
                      "--prime", "3", "--machine")
    _, second, _ = run(capsys, "parahoric", "F4", "--node", "all",
                       "--prime", "3", "--machine")
    assert first == second
    doc = json.loads(first)
    assert [r["reduced"]["label"] for r in doc["payload"]["reports"]] == [
        "F4", "A1+C3", "A2+A2", "A1+A3", "B4"]


def test_roots_command(capsys):
    code, out, _ = run(capsys, "roots", "B2", "--machine")
    assert code == 0
    doc = json.loads(out)
    assert doc["payload"]["count"] == 8
    lengths = {tuple(r["coords"]): r["length"] for r in doc["payload"]["roots"]}
    assert lengths[(1, 2)] == "long"
    assert lengths[(1, 1)] == "short"


def test_algebra_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "algebra", "G2", "--verify", "full")
    assert code == 0
    assert "verification (full): ok" in out


def test_gram_flags(capsys):
    code, out, _ = run(capsys, "gram", "A1", "--normalized", "--divisors")
    assert code == 0
    assert "det = -2" in out
    assert "elementary divisors: [1, 1, 2]" in out
    code, out, _ = run(capsys, "gram", "A1")
    assert "Killing form" in out
    assert "det = -2^7" in out  # normalized det -2 scaled by (2 h_dual)^dim = 4^3


def test_parahoric_node_selectors(capsys):
    for selector in ["4", "alpha4", "mark=5"]:
        code, out, _ = run(capsys, "parahoric", "E8", "--node", selector,
                           "--prime", "2")
        assert code == 0
        assert "A4+A4" in out
        assert "discriminant 2^200" in out
    code, out, _ = run(capsys, "parahoric", "E8", "--node", "affine",
                       "--prime", "2")
    assert code == 0
    assert "reduced type E8" in out
    assert "discriminant 1" in out


def test_match_found_and_not_found(capsys):
    code, out, _ = run(capsys, "match", "E8", "--prime", "2",
                       "--disc", "2^200")
    assert code == 0
    assert "alpha4 (mark 5)" in out
    code, out, _ = run(capsys, "match", "E8", "--prime", "2",
                       "--disc", "2^248")
    assert code == 0
    assert "no maximal parahoric" in out


@pytest.mark.parametrize("argv", [
    ("info", "Z9"),
    ("info", "B1"),
    ("parahoric", "E8", "--node", "9", "--prime", "2"),
    ("parahoric", "E8", "--node", "alpha9", "--prime", "2"),
    ("parahoric", "E8", "--node", "2", "--prime", "6"),
    ("parahoric", "B3", "--node", "mark=2", "--prime", "5"),  # ambiguous mark
    ("match", "E8", "--prime", "2", "--disc", "4^3"),
    ("match", "E8", "--prime", "9", "--disc", "2^2"),
])
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("error:")


def test_verify_paper_fast(capsys):
    code, out, _ = run(capsys, "verify-paper")
    assert code == 0
    assert "failed" in out.splitlines()[-1]
    assert "0 failed" in out.splitlines()[-1]
    assert "[INFO" in out  # the B/C rows stay informational
    assert "paper-table mismatch candidate" in out


@pytest.mark.slow
def test_verify_paper_slow_machine(capsys):
    code, out, _ = run(capsys, "verify-paper", "--slow", "--machine")
    assert code == 0
    doc = json.loads(out)
    assert doc["payload"]["failed"] == 0
    names = {r["name"] for r in doc["payload"]["results"]}
    assert "jacobi/E8" in names
