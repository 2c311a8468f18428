"""Command-line interface: exit codes, frozen output, JSON artifacts."""

from __future__ import annotations

import json
import shutil
import subprocess

import pytest

from schurgrid.cli import EXIT_OK, EXIT_REFUTED, EXIT_USAGE, main


@pytest.fixture(autouse=True)
def isolated_dirs(tmp_path, monkeypatch):
    monkeypatch.setenv("SCHURGRID_CACHE_DIR", str(tmp_path / "cache"))
    monkeypatch.setenv("SCHURGRID_RESULTS_DIR", str(tmp_path / "results"))


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# qsym / grid enum
# ---------------------------------------------------------------------------


def test_qsym_fundamental_output(capsys):
    code, out, err = run(capsys, ["qsym", 'grid("-+", 3)'])
    assert (code, err) == (EXIT_OK, "")
    assert out == "n=3; F{} + 2*F{1} + F{1,2}\n"


def test_qsym_schur_output(capsys):
    code, out, _ = run(capsys, ["qsym", "C(5)", "--schur"])
    assert code == EXIT_OK
    assert out == "s[5] + s[4,1]\n"


def test_qsym_schur_reports_asymmetry_without_failing(capsys):
    code, out, _ = run(capsys, ["qsym", "D(3,{1})", "--schur"])
    assert code == EXIT_OK
    assert out == (
        "NotSymmetric(n=3; monomial coefficient at {1} is 2 but at {2} is 0)\n"
    )


def test_qsym_monomial_evaluation(capsys):
    code, out, _ = run(capsys, ["qsym", "C(3)", "--n-vars", "2"])
    assert code == EXIT_OK
    assert out == "x2^3 + 2*x1*x2^2 + 2*x1^2*x2 + x1^3\n"


def test_grid_enum_accepts_leading_dash_matrix(capsys):
    code, out, _ = run(capsys, ["grid", "enum", "-+", "--n", "3"])
    assert code == EXIT_OK
    assert out == "123\n213\n312\n321\n"


def test_expression_error_exits_one(capsys):
    code, out, err = run(capsys, ["qsym", "S(x)"])
    assert (code, out) == (EXIT_USAGE, "")
    assert err == "error: position 2: expected a number, found 'x'\n"


def test_missing_subcommand_exits_one(capsys):
    code, out, err = run(capsys, [])
    assert code == EXIT_USAGE
    assert "required: command" in err


# ---------------------------------------------------------------------------
# check
# ---------------------------------------------------------------------------


def test_check_verified_with_json(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(
        capsys, ["check", "cor-LC-CL", "--n", "3", "--json", str(target)]
    )
    assert code == EXIT_OK
    assert out.startswith("check cor-LC-CL (n=3): verified")
    assert "schur of horizontal rotations: s[3] + 2*s[2,1] + s[1,1,1]" in out
    assert "schur of arc class: s[3] + 2*s[2,1] + s[1,1,1]" in out
    payload = json.loads(target.read_text())
    assert payload["status"] == "verified"
    assert payload["check_id"] == "cor-LC-CL"
    assert payload["lhs"] == payload["rhs"]


def test_check_unknown_id_exits_one(capsys):
    code, out, err = run(capsys, ["check", "nope"])
    assert (code, out) == (EXIT_USAGE, "")
    assert "unknown check id" in err


def test_check_fixed_degree_override_exits_one(capsys):
    code, _, err = run(capsys, ["check", "neg-arc-grid", "--n", "5"])
    assert code == EXIT_USAGE
    assert "cannot override" in err


def test_check_resource_skip_exits_one(capsys, monkeypatch):
    monkeypatch.setenv("SCHURGRID_CHECK_BUDGET", "10")
    code, out, err = run(capsys, ["check", "thm-main-2", "--n", "6"])
    assert code == EXIT_USAGE
    assert "resource-skipped" in out
    assert "budget" in err


# ---------------------------------------------------------------------------
# scan
# ---------------------------------------------------------------------------


def test_scan_holds_exits_zero(capsys):
    code, out, _ = run(capsys, ["scan", "conj-10-1", "--max-n", "3"])
    assert code == EXIT_OK
    assert out.startswith("scan conj-10-1: holds up to n=3")


def test_scan_refuted_exits_two_with_witness(capsys, tmp_path):
    target = tmp_path / "scan.json"
    code, out, _ = run(
        capsys, ["scan", "knuth-product", "--max-n", "5", "--json", str(target)]
    )
    assert code == EXIT_REFUTED
    assert out.startswith("scan knuth-product: refuted at n=5")
    assert "witness: A=class of 12435, B=class of 14325" in out
    payload = json.loads(target.read_text())
    assert payload["status"] == "refuted"
    assert [r["n"] for r in payload["records"]] == [3, 4, 5]
    assert payload["witness"].startswith("A=class of 12435")


# ---------------------------------------------------------------------------
# cache
# ---------------------------------------------------------------------------


def test_cache_rebuild_verify_and_tamper(capsys, tmp_path):
    code, out, _ = run(capsys, ["cache", "rebuild", "--n", "3"])
    assert code == EXIT_OK
    assert "rebuilt descent-count table for degree 3 (3 partitions)" in out

    code, out, _ = run(capsys, ["cache", "verify", "--n", "3"])
    assert code == EXIT_OK
    assert out == "cache file for degree 3 verified\n"

    table = tmp_path / "cache" / "dtable_3.json"
    payload = json.loads(table.read_text())
    payload["entries"][0]["count"] = 999
    table.write_text(json.dumps(payload))
    code, _, err = run(capsys, ["cache", "verify", "--n", "3"])
    assert code == EXIT_USAGE
    assert "missing, corrupt, or stale" in err


# ---------------------------------------------------------------------------
# list-checks and the installed entry point
# ---------------------------------------------------------------------------


def test_list_checks_output(capsys):
    code, out, _ = run(capsys, ["list-checks"])
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "checks (id, default degree, statement):"
    assert len(lines) == 33
    body = "\n".join(lines)
    for check_id in ("thm-main-1", "neg-stack", "kj-cardinality"):
        assert check_id in body
    for conj_id in ("conj-10-2", "knuth-product", "restriction"):
        assert conj_id in body


def test_console_script_is_wired():
    exe = shutil.which("schurgrid")
    assert exe is not None
    proc = subprocess.run(
        [exe, "qsym", "C(4)", "--schur"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout == "s[4] + s[3,1]\n"
