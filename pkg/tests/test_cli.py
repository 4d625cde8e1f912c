import io
import json
import subprocess
import sys

import pytest

from mcftiling.cli import main


def run_cli(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_count_example():
    assert run_cli("count", "--a", "2,3,4", "--b", "_,1,2", "--c", "_,_,5") == (0, "37\n")


def test_factorial_check():
    code, text = run_cli("identities", "--check", "factorial", "--n", "20")
    assert code == 0 and "verified_up_to: 20" in text
    assert "witness: none" in text


def test_single_matrix_convergent():
    assert run_cli("convergents", "--a", "4", "--b", "0", "--c", "1", "--n", "0") == (0, "A=4 B=0 C=1\n")


def test_convergent_listing():
    code, text = run_cli("convergents", "--a", "4,2,3", "--b", "_,1,1", "--c", "_,_,1")
    assert code == 0
    assert [line.split()[1] for line in text.splitlines()] == ["A=4", "A=9", "A=32"]


def test_count_kinds():
    args = ("--a", "2,3,4", "--b", "_,1,2", "--c", "_,_,5")
    assert run_cli("count", *args, "--kind", "C")[1] == "14\n"
    assert run_cli("count", *args, "--kind", "B")[1].strip().isdigit()


def test_expand_then_evaluate_round_trip(tmp_path):
    code, text = run_cli("expand", "--values", "5/3,7/3", "--format", "json")
    assert code == 0
    doc = json.loads(text)
    assert doc["schema_version"] == 1 and doc["exact"] is True
    path = tmp_path / "q.json"
    path.write_text(text)
    code, text = run_cli("evaluate", "--input", str(path), "--format", "json")
    result = json.loads(text)
    assert (result["first"], result["second"]) == ("5/3", "7/3")


@pytest.mark.parametrize("b0, c0, c1", [("_", "_", "_"), ("0", "1", "0"), ("9", "1", "-4")])
def test_placeholders_do_not_change_numerators(b0, c0, c1):
    code, text = run_cli(
        "convergents", "--a", "3,1,4,1", "--b", f"{b0},5,9,2", "--c", f"{c0},{c1},6,5"
    )
    assert code == 0
    assert [line.split()[1] for line in text.splitlines()] == ["A=3", "A=8", "A=65", "A=96"]


def test_mixed_domain_error_exits_one(capsys):
    code, _ = run_cli("count-mixed", "--a", "3,2", "--b", "_,-2", "--c", "_,_")
    assert code == 1
    err = capsys.readouterr().err
    assert "InvalidMixedConditions" in err and "b<0, c>=0 requires a>|b|" in err


def test_mixed_count():
    assert run_cli("count-mixed", "--a", "3,4", "--b", "_,-2")[1] == "10\n"


@pytest.mark.parametrize(
    "argv",
    [
        ["count", "--a", "1,x"],
        ["count", "--a", "1,2", "--b", "1"],
        ["frobnicate"],
        ["convergents", "--a", "4", "--b", "0", "--c", "1", "--n", "3"],
        ["count", "--a", "1", "--input", "nowhere.json"],
    ],
)
def test_usage_errors_exit_two(argv, capsys):
    assert run_cli(*argv)[0] == 2


def test_enumerate_lines_and_budget(monkeypatch):
    code, text = run_cli("enumerate", "--a", "2,3", "--b", "_,1")
    assert code == 0
    lines = text.splitlines()
    assert len(lines) == 7 and lines[-1] == "domino@0×1"
    monkeypatch.setenv("MCF_ENUM_BUDGET", "3")
    assert run_cli("enumerate", "--a", "2,3", "--b", "_,1")[0] == 1


def test_circular_and_degree_m():
    assert run_cli("count-circular", "--a", "1,1,1", "--b", "1,1,1")[1] == "4\n"
    assert run_cli("count-degree-m", "--bounds", "1,1,1,1,1;1,1,1,1,1")[1] == "8\n"


def test_big_integers_are_strings():
    code, text = run_cli("convergents", "--a", ",".join(["99"] * 12), "--format", "json")
    last = json.loads(text)["convergents"][-1]
    assert last["A"] == str(99**12)


def test_stdin_input():
    doc = json.dumps({"a": [2, 3, 4], "b": [0, 1, 2], "c": [1, 0, 5]})
    proc = subprocess.run(
        [sys.executable, "-m", "mcftiling", "count", "--input", "-"],
        input=doc, capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "37\n"
