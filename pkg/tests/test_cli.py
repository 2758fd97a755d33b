from pathlib import Path

import pytest

from cli_matrix import DATA, matrix, run_cli, run_matrix
from cpsm.cli import main
from cpsm.io import read_witness


def test_exit_code_matrix(tmp_path):
    assert run_matrix(tmp_path) == []


def test_matrix_covers_all_codes(tmp_path):
    assert {row[2] for row in matrix(tmp_path)} == {0, 1, 2, 3}


def test_solve_writes_witness(tmp_path):
    out = tmp_path / "w.json"
    assert main(["solve", str(DATA / "corner_subset.json"), "--method", "subset", "-o", str(out)]) == 0
    assert read_witness(out) in {(0, 1, 3), (0, 2, 3)}


def test_render_to_stdout(capsys):
    assert main(["render", str(DATA / "straight.json")]) == 0
    assert capsys.readouterr().out.startswith("<?xml")


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0


@pytest.mark.parametrize("argv", [["reduce", "x.cnf", "-o", "a", "--meta", "b", "--eps", "0"], []])
def test_usage_errors(argv):
    assert main(argv) == 2


def test_module_entry_point():
    res = run_cli("validate-formula", DATA / "phi.cnf")
    assert res.returncode == 0 and res.stdout.strip() == "OK"
