"""Command-line behavior: summaries, files, exit codes."""

import json

import pytest

import lrckit as lk
from lrckit.cli import main

from known_codes import GF4, GF5


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_construct_h1_summary_and_file(tmp_path, capsys):
    out = tmp_path / "h1.json"
    code, stdout, _ = run(
        capsys, "construct", "--kind", "h1", "--q", "5", "--r", "4", "--m", "2",
        "--f", "1", "-o", str(out),
    )
    assert code == 0
    assert "[12,8,3]" in stdout
    assert "r=4" in stdout and "δ=3" in stdout
    design = lk.LrcDesign.from_dict(json.loads(out.read_text()))
    assert design == lk.build_h1(GF5, 4, 2)


def test_construct_h3_summary(tmp_path, capsys):
    out = tmp_path / "h3.json"
    code, stdout, _ = run(
        capsys, "construct", "--kind", "h3", "--q", "4", "--r", "3", "--m", "2",
        "-o", str(out),
    )
    assert code == 0
    assert "[10,5,4]" in stdout and "r=3" in stdout and "δ=3" in stdout


def test_construct_rejects_oversized_r(capsys):
    code, _, stderr = run(
        capsys, "construct", "--kind", "h1", "--q", "4", "--r", "4", "--m", "1"
    )
    assert code == 2
    assert "q >= r+1" in stderr


def test_construct_general_from_matrix_files(tmp_path, capsys):
    u = lk.vandermonde(lk.FieldSpec(7), 2, range(6))
    upath = tmp_path / "u.json"
    upath.write_text(json.dumps(u.to_dict()))
    out = tmp_path / "design.json"
    code, stdout, _ = run(
        capsys, "construct", "--kind", "general", "--u", str(upath), "--u", str(upath),
        "--r", "4", "--delta", "3", "--d", "3", "-o", str(out),
    )
    assert code == 0
    assert "[12,8,3]" in stdout
    design = lk.LrcDesign.from_dict(json.loads(out.read_text()))
    assert design.kind == "general"


def test_construct_then_verify_round_trip(tmp_path, capsys):
    design_path = tmp_path / "h1.json"
    report_path = tmp_path / "report.json"
    run(capsys, "construct", "--kind", "h1", "--q", "5", "--r", "4", "--m", "2",
        "-o", str(design_path))
    code, stdout, _ = run(
        capsys, "verify", str(design_path), "--report", str(report_path)
    )
    assert code == 0
    assert "OPTIMAL: d=3 = bound 3" in stdout
    report = json.loads(report_path.read_text())
    assert (report["n"], report["k"], report["d"]) == (12, 8, 3)
    assert report["verdict"] == "optimal"
    assert report["version"] == lk.__version__


def test_verify_h2_json_output(tmp_path, capsys):
    design_path = tmp_path / "h2.json"
    run(capsys, "construct", "--kind", "h2", "--q", "4", "--r", "3", "--m", "2",
        "-o", str(design_path))
    code, stdout, _ = run(capsys, "verify", str(design_path), "--json")
    assert code == 0
    report = json.loads(stdout)
    assert report["verdict"] == "optimal"
    assert report["d"] == 4 and report["bound"] == 4


def test_verify_suboptimal_exit_code(tmp_path, capsys):
    # a general design claiming delta=2 on blocks that certify more: use a
    # single-parity U block, then lower the claimed distance by hand
    design = lk.build_h1(GF5, 4, 2)
    blob = design.to_dict()
    # zero one block column so the distance collapses but the shape survives
    for row in blob["data"]:
        row[0] = 0
    blob["kind"] = "general"
    path = tmp_path / "weak.json"
    path.write_text(json.dumps(blob))
    code, stdout, _ = run(capsys, "verify", str(path))
    assert code == 1
    assert "OPTIMAL" not in stdout.splitlines()[0] or "LOCALITY" in stdout
    code_relaxed, _, _ = run(capsys, "verify", str(path), "--allow-suboptimal")
    assert code_relaxed == 0


def test_verify_malformed_design_exit_2(tmp_path, capsys):
    design = lk.build_h1(GF5, 4, 2).to_dict()
    design["data"][0][0] = 7  # not a GF(5) code
    path = tmp_path / "corrupt.json"
    path.write_text(json.dumps(design))
    code, _, stderr = run(capsys, "verify", str(path))
    assert code == 2
    assert "error" in stderr


def test_verify_missing_file_exit_2(tmp_path, capsys):
    code, _, stderr = run(capsys, "verify", str(tmp_path / "nope.json"))
    assert code == 2
    assert "cannot read" in stderr


def test_verify_budget_exceeded_exit_3(tmp_path, capsys, monkeypatch):
    design_path = tmp_path / "h1.json"
    run(capsys, "construct", "--kind", "h1", "--q", "5", "--r", "4", "--m", "2",
        "-o", str(design_path))
    monkeypatch.setenv("LRC_WORK_BUDGET", "3")
    code, _, stderr = run(capsys, "verify", str(design_path))
    assert code == 3
    assert "budget" in stderr


def test_repair_erase_local(tmp_path, capsys):
    design_path = tmp_path / "h1.json"
    run(capsys, "construct", "--kind", "h1", "--q", "5", "--r", "4", "--m", "2",
        "-o", str(design_path))
    code, stdout, _ = run(
        capsys, "repair", str(design_path), "--random-message", "--erase", "0,1",
        "--seed", "1",
    )
    assert code == 0
    assert "coordinate 0: local" in stdout
    assert "coordinate 1: local" in stdout
    assert "symbols read: 4" in stdout


def test_repair_unrecoverable_exit_1(tmp_path, capsys):
    design_path = tmp_path / "h1.json"
    run(capsys, "construct", "--kind", "h1", "--q", "5", "--r", "4", "--m", "2",
        "-o", str(design_path))
    code, stdout, _ = run(
        capsys, "repair", str(design_path), "--random-message", "--erase", "0,1,2"
    )
    assert code == 1
    assert "UNRECOVERABLE" in stdout


def test_repair_sweep_h3(tmp_path, capsys):
    design_path = tmp_path / "h3.json"
    run(capsys, "construct", "--kind", "h3", "--q", "4", "--r", "3", "--m", "2",
        "-o", str(design_path))
    code, stdout, _ = run(
        capsys, "repair", str(design_path), "--sweep", "--max-erasures", "3",
        "--random-message",
    )
    assert code == 0
    assert "size 3: 120/120 patterns recovered" in stdout
    assert "total 175/175 patterns recovered (100.0%)" in stdout


def test_repair_word_file_with_inline_design(tmp_path, capsys):
    design = lk.build_h3(GF4, 3, 2)
    word = list(lk.encode(design, [1, 2, 3, 0, 1]))
    word[4] = None
    payload = {"design": design.to_dict(), "word": word}
    path = tmp_path / "word.json"
    path.write_text(json.dumps(payload))
    code, stdout, _ = run(capsys, "repair", "--word", str(path), "--json")
    assert code == 0
    result = json.loads(stdout)
    assert result["ok"] is True
    assert result["modes"] == {"4": "local"}


def test_repair_word_file_with_design_reference(tmp_path, capsys):
    design = lk.build_h3(GF4, 3, 2)
    (tmp_path / "design.json").write_text(json.dumps(design.to_dict()))
    word = list(lk.encode(design, [0, 1, 2, 3, 1]))
    word[0] = None
    word[9] = None
    payload = {"design": "design.json", "word": word}
    path = tmp_path / "word.json"
    path.write_text(json.dumps(payload))
    code, stdout, _ = run(capsys, "repair", "--word", str(path))
    assert code == 0
    assert "coordinate 0: local" in stdout


def test_repair_deterministic_given_seed(tmp_path, capsys):
    design_path = tmp_path / "h2.json"
    run(capsys, "construct", "--kind", "h2", "--q", "4", "--r", "3", "--m", "2",
        "-o", str(design_path))
    _, first, _ = run(capsys, "repair", str(design_path), "--random-message",
                      "--erase", "1,4", "--seed", "9", "--json")
    _, second, _ = run(capsys, "repair", str(design_path), "--random-message",
                       "--erase", "1,4", "--seed", "9", "--json")
    assert first == second


def test_mds_check(tmp_path, capsys):
    good = tmp_path / "g1.json"
    good.write_text(json.dumps(lk.build_g1(GF5).to_dict()))
    code, stdout, _ = run(capsys, "mds-check", str(good))
    assert code == 0
    assert "MDS" in stdout

    bad = tmp_path / "bad.json"
    bad.write_text(
        json.dumps(lk.FqMatrix(GF5, [[1, 1, 2], [2, 2, 3]]).to_dict())
    )
    code, stdout, _ = run(capsys, "mds-check", str(bad), "--json")
    assert code == 1
    assert json.loads(stdout) == {"mds": False, "witness": [0, 1]}


def test_construct_json_summary(capsys):
    code, stdout, _ = run(
        capsys, "construct", "--kind", "h2", "--q", "4", "--r", "3", "--m", "2",
        "--json",
    )
    assert code == 0
    summary = json.loads(stdout)
    assert summary["n"] == 12 and summary["k"] == 6 and summary["d"] == 4
    assert summary["kind"] == "H2"


def test_field_flags(capsys, tmp_path):
    out = tmp_path / "d.json"
    code, _, _ = run(
        capsys, "construct", "--kind", "h2", "--p", "2", "--e", "2",
        "--modulus", "1,1,1", "--r", "3", "--m", "1", "-o", str(out),
    )
    assert code == 0
    blob = json.loads(out.read_text())
    assert blob["field"] == {"p": 2, "e": 2, "modulus": [1, 1, 1]}


def test_bad_q_flag(capsys):
    code, _, stderr = run(
        capsys, "construct", "--kind", "h1", "--q", "6", "--r", "2", "--m", "1"
    )
    assert code == 2
    assert "prime power" in stderr


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "lrckit", "--version"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert lk.__version__ in proc.stdout
