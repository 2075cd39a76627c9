"""Command line behavior: formats, exit codes, determinism."""

import json
import subprocess
import sys

import pytest

from kfusion import build_root_datum, fusion_ring, level_form
from kfusion.cli import main, parse_job, UsageError


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_basis_json(capsys):
    code, out, err = run_cli(capsys, "basis", "--type", "A1", "--level", "3", "--format", "json")
    assert code == 0 and err == ""
    assert json.loads(out) == {"basis": [[1], [2]]}


def test_basis_pretty_and_csv(capsys):
    code, out, _ = run_cli(capsys, "basis", "--type", "A2", "--level", "4")
    assert code == 0
    assert "3 regular orbit classes at level 4" in out
    code, out, _ = run_cli(capsys, "basis", "--type", "A2", "--level", "4", "--format", "csv")
    assert out.splitlines()[0] == "w1,w2"
    assert out.splitlines()[1] == "1,1"


def test_identity_success(capsys):
    code, out, err = run_cli(
        capsys, "identity", "--type", "A2", "--level", "4", "--format", "json"
    )
    assert code == 0
    document = json.loads(out)
    assert document == {"identity": [1, 0, 0], "weight": [1, 1], "index": 0}


def test_identity_failure_exit_code_and_message(capsys):
    code, out, err = run_cli(capsys, "identity", "--type", "A1", "--level", "1")
    assert code == 2
    assert out == ""
    assert err.strip() == "NoIdentity: rho is singular at level 1"


def test_level_must_be_positive(capsys):
    code, out, err = run_cli(capsys, "check", "--type", "A1", "--level", "0")
    assert code == 1
    assert "level must be positive" in err


def test_level_source_is_exactly_one(capsys):
    code, _, err = run_cli(capsys, "basis", "--type", "A1")
    assert code == 1 and "one of --level or --rep" in err
    code, _, err = run_cli(capsys, "basis", "--type", "A1", "--level", "3", "--rep", "2")
    assert code == 1 and "mutually exclusive" in err


def test_inadmissible_type_is_a_domain_error(capsys):
    code, _, err = run_cli(capsys, "basis", "--type", "B1", "--level", "3")
    assert code == 2
    assert err.startswith("InvalidType:")


def test_malformed_flags(capsys):
    code, _, err = run_cli(capsys, "basis", "--level", "3")
    assert code == 1
    code, _, err = run_cli(capsys, "frobnicate", "--type", "A1", "--level", "3")
    assert code == 1
    code, _, err = run_cli(capsys, "basis", "--type", "A1", "--level", "x")
    assert code == 1
    code, _, err = run_cli(capsys, "theta", "--type", "A1", "--level", "3", "--chi", "a,b")
    assert code == 1


def test_rep_derives_the_level(capsys):
    code, by_rep, _ = run_cli(
        capsys, "fusion-table", "--type", "A1", "--rep", "2", "--format", "json"
    )
    assert code == 0
    code, by_level, _ = run_cli(
        capsys, "fusion-table", "--type", "A1", "--level", "4", "--format", "json"
    )
    assert by_rep == by_level
    assert json.loads(by_rep)["level"] == 4


def test_rep_validation(capsys):
    code, _, err = run_cli(capsys, "basis", "--type", "A2", "--rep", "1")
    assert code == 1 and "2 coordinates" in err
    code, _, err = run_cli(capsys, "basis", "--type", "A2", "--rep=-1,0")
    assert code == 1 and "dominant" in err
    code, _, err = run_cli(capsys, "fusion-table", "--type", "A2", "--rep", "0,0")
    assert code == 2 and err.startswith("DegenerateTwist:")


def test_fusion_table_json_schema_and_round_trip(capsys):
    code, out, _ = run_cli(
        capsys, "fusion-table", "--type", "A1", "--level", "4", "--format", "json"
    )
    document = json.loads(out)
    assert set(document) == {"type", "level", "basis", "identity", "N"}
    assert document["type"] == "A1"
    assert document["level"] == 4
    assert document["basis"] == [[1], [2], [3]]
    assert document["identity"] == [1, 0, 0]

    n = len(document["basis"])
    tensor = document["N"]
    unit = document["identity"].index(1)
    for a in range(n):
        for b in range(n):
            assert tensor[a][b] == tensor[b][a]
            for c in range(n):
                assert tensor[a][b][c] >= 0
            assert tensor[unit][a][b] == (1 if a == b else 0)

    ring = fusion_ring(level_form(build_root_datum("A1"), 4))
    assert tuple(tuple(tuple(row) for row in plane) for plane in tensor) == ring.structure_constants


def test_fusion_table_csv(capsys):
    code, out, _ = run_cli(
        capsys, "fusion-table", "--type", "A1", "--level", "3", "--format", "csv"
    )
    lines = out.splitlines()
    assert lines[0] == "lambda,mu,nu,N"
    assert len(lines) == 1 + 2 * 2 * 2
    assert "1,1,0,1" in lines  # E2 * E2 = E1


def test_theta_json_and_singular(capsys):
    code, out, _ = run_cli(
        capsys, "theta", "--type", "A1", "--level", "3", "--chi", "5", "--format", "json"
    )
    document = json.loads(out)
    assert document["canonical"] == [1] and document["sign"] == -1
    assert len(document["terms"]) == 2
    code, _, err = run_cli(capsys, "theta", "--type", "A1", "--level", "3", "--chi", "6")
    assert code == 2 and err.startswith("SingularInput:")


def test_theta_matrix_dump(capsys):
    code, out, _ = run_cli(
        capsys,
        "theta", "--type", "A1", "--level", "3", "--chi", "1",
        "--matrix", "--format", "json",
    )
    document = json.loads(out)
    matrix = document["matrix"]
    assert matrix["cyclotomic_order"] == 6
    assert matrix["rows"] == [[1], [2]]
    assert matrix["entries"] == [[[-1, 2], [-1, 2]], [[-1, 2], [1, -2]]]


def test_coform_json(capsys):
    code, out, _ = run_cli(
        capsys, "coform", "--type", "A1", "--level", "3", "--format", "json"
    )
    document = json.loads(out)
    assert document["matrix"] == [[1, 0], [0, 1]]
    assert document["overall_sign"] == 1
    code, out, _ = run_cli(
        capsys, "coform", "--type", "A1", "--level", "3", "--omega", "6", "--format", "json"
    )
    assert json.loads(out)["matrix"] == [[1, 0], [0, 1]]


def test_check_command(capsys):
    code, out, _ = run_cli(capsys, "check", "--type", "A1", "--level", "4")
    assert code == 0
    assert out.strip().splitlines()[-1] == "all checks passed"
    assert all(line.startswith("PASS") for line in out.strip().splitlines()[:-1])
    code, out, _ = run_cli(
        capsys, "check", "--type", "A2", "--level", "5", "--format", "json"
    )
    assert code == 0
    document = json.loads(out)
    assert document["passed"] is True
    assert all(r["passed"] for r in document["results"])


def test_deterministic_output(capsys):
    args = ("check", "--type", "A1", "--level", "5", "--seed", "9", "--format", "json")
    _, first, _ = run_cli(capsys, *args)
    _, second, _ = run_cli(capsys, *args)
    assert first == second
    args = ("fusion-table", "--type", "B2", "--level", "4", "--format", "json")
    _, first, _ = run_cli(capsys, *args)
    _, second, _ = run_cli(capsys, *args)
    assert first == second


def test_out_flag_writes_the_document(tmp_path, capsys):
    target = tmp_path / "table.json"
    code, out, _ = run_cli(
        capsys,
        "fusion-table", "--type", "A1", "--level", "3",
        "--format", "json", "--out", str(target),
    )
    assert code == 0 and out == ""
    on_disk = json.loads(target.read_text())
    _, direct, _ = run_cli(
        capsys, "fusion-table", "--type", "A1", "--level", "3", "--format", "json"
    )
    assert on_disk == json.loads(direct)


def test_parse_job_roundtrip():
    job = parse_job(
        ["theta", "--type", "G2", "--level", "5", "--chi", "1,1", "--seed", "3"]
    )
    assert job.command == "theta"
    assert job.type_name == "G2"
    assert job.level == 5
    assert job.chi == (1, 1)
    assert job.seed == 3 and job.fmt == "pretty"
    with pytest.raises(UsageError):
        parse_job(["basis", "--type", "A1", "--level", "-2"])


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "kfusion", "basis", "--type", "A1", "--level", "3",
         "--format", "json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"basis": [[1], [2]]}
