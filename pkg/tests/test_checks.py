"""Registered checks and conjecture scans: statuses, budgets, persistence."""

from __future__ import annotations

import json

import pytest

from schurgrid.checks import (
    CHECK_IDS,
    SCAN_IDS,
    CheckReport,
    GridResourceError,
    check_budget,
    list_checks,
    list_scans,
    results_dir,
    run_check,
    run_checks,
    scan_conjecture,
)

SMOKE_N = 3
KNUTH_WITNESS = (
    "A=class of 12435, B=class of 14325: NotSymmetric(n=5; monomial "
    "coefficient at {1,2} is 5 but at {1,4} is 4)"
)


@pytest.fixture(autouse=True)
def isolated_results(tmp_path, monkeypatch):
    monkeypatch.setenv("SCHURGRID_RESULTS_DIR", str(tmp_path / "results"))
    return tmp_path / "results"


# ---------------------------------------------------------------------------
# Registry and report plumbing
# ---------------------------------------------------------------------------


def test_registry_shape():
    assert len(CHECK_IDS) == 26
    assert len(set(CHECK_IDS)) == 26
    assert SCAN_IDS == (
        "conj-10-1",
        "conj-10-2",
        "conj-10-3",
        "knuth-product",
        "restriction",
    )
    listed = list_checks()
    assert [cid for cid, _, _ in listed] == list(CHECK_IDS)
    assert all(desc for _, _, desc in listed)
    assert [cid for cid, _, _ in list_scans()] == list(SCAN_IDS)


@pytest.mark.parametrize("check_id", CHECK_IDS)
def test_every_check_verifies_at_smoke_degree(check_id):
    fixed = {"neg-arc-grid": None, "neg-knuth-rot": None, "neg-stack": None}
    n = fixed.get(check_id, SMOKE_N) if check_id in fixed else SMOKE_N
    report = run_check(check_id, n)
    assert report.status == "verified", report.notes
    assert report.lhs == report.rhs or report.lhs.startswith("cases=")
    assert report.elapsed_ms >= 0


def test_report_round_trip_and_summary():
    report = run_check("kj-cardinality", 4)
    again = CheckReport.from_json(json.loads(json.dumps(report.to_json())))
    assert again == report
    lines = report.summary_lines()
    assert lines[0].startswith("check kj-cardinality (n=4): verified")
    assert lines[1].startswith("  lhs: ")
    assert lines[2].startswith("  rhs: ")


def test_unknown_and_invalid_degrees():
    with pytest.raises(ValueError, match="unknown check id"):
        run_check("nope")
    with pytest.raises(ValueError, match="cannot override"):
        run_check("neg-arc-grid", 5)
    with pytest.raises(ValueError, match="needs degree >= 3"):
        run_check("prop-R2", 2)
    with pytest.raises(ValueError, match="unknown conjecture id"):
        scan_conjecture("nope", 4)


def test_resource_skip_honors_budget(monkeypatch):
    monkeypatch.setenv("SCHURGRID_CHECK_BUDGET", "10")
    assert check_budget() == 10
    report = run_check("thm-main-2", 6)
    assert report.status == "resource-skipped"
    assert "budget" in report.notes


def test_run_checks_driver():
    reports = run_checks(
        ["kj-cardinality", "ll-formula", "neg-arc-grid"],
        n_overrides={"kj-cardinality": 5, "ll-formula": 4},
        max_workers=3,
    )
    assert [r.check_id for r in reports] == [
        "kj-cardinality",
        "ll-formula",
        "neg-arc-grid",
    ]
    assert [r.n for r in reports] == [5, 4, 4]
    assert all(r.status == "verified" for r in reports)


# ---------------------------------------------------------------------------
# Negative checks reproduce their recorded counterexamples
# ---------------------------------------------------------------------------


def test_negative_checks_pin_failures():
    arc = run_check("neg-arc-grid")
    assert arc.status == "verified" and arc.n == 4
    knuth = run_check("neg-knuth-rot")
    assert knuth.status == "verified" and knuth.n == 5
    assert "NotSymmetric(n=5" in knuth.rhs or "NotSymmetric(n=5" in knuth.notes
    stack = run_check("neg-stack")
    assert stack.status == "verified" and stack.n == 6


# ---------------------------------------------------------------------------
# Scans: verdicts, persistence, refutation
# ---------------------------------------------------------------------------


def test_scan_holds_and_persists(isolated_results):
    report = scan_conjecture("conj-10-1", 4)
    assert report.status == "holds-up-to"
    assert report.frontier == 4
    assert report.witness is None
    assert [r.n for r in report.records] == [3, 4]
    stored = sorted(p.name for p in results_dir().glob("*.json"))
    assert stored == ["conj-10-1-n3.json", "conj-10-1-n4.json"]
    payload = json.loads((results_dir() / "conj-10-1-n4.json").read_text())
    assert payload["verdict"] == "holds"
    assert payload["cases"] > 0

    # Rerunning recomputes and reconciles against the stored verdicts.
    again = scan_conjecture("conj-10-1", 4)
    assert [r.verdict for r in again.records] == ["holds", "holds"]


def test_scan_rerun_detects_tampered_verdict(isolated_results):
    scan_conjecture("conj-10-2", 3)
    path = results_dir() / "conj-10-2-n3.json"
    payload = json.loads(path.read_text())
    payload["verdict"] = "refuted"
    path.write_text(json.dumps(payload))
    with pytest.raises(RuntimeError, match="stored verdict"):
        scan_conjecture("conj-10-2", 3)


def test_scan_budget_stop(monkeypatch):
    monkeypatch.setenv("SCHURGRID_CHECK_BUDGET", "1")
    report = scan_conjecture("conj-10-3", 5)
    assert report.status == "holds-up-to"
    assert report.frontier == 2
    assert report.records == ()
    assert "exceeds" in report.notes and "budget" in report.notes


def test_knuth_product_scan_refuted_at_degree_five():
    holds = scan_conjecture("knuth-product", 4)
    assert holds.status == "holds-up-to"
    assert holds.frontier == 4
    assert [(r.n, r.verdict) for r in holds.records] == [
        (3, "holds"),
        (4, "holds"),
    ]

    refuted = scan_conjecture("knuth-product", 6)
    assert refuted.status == "refuted"
    assert refuted.witness == KNUTH_WITNESS
    assert refuted.records[-1].n == 5
    assert refuted.frontier == 4
    payload = json.loads((results_dir() / "knuth-product-n5.json").read_text())
    assert payload["witness"] == KNUTH_WITNESS


def test_other_scans_hold_at_small_degrees():
    assert scan_conjecture("conj-10-3", 4).status == "holds-up-to"
    assert scan_conjecture("restriction", 5).status == "holds-up-to"


def test_grid_resource_error_is_distinct():
    assert issubclass(GridResourceError, Exception)
    assert not issubclass(GridResourceError, ValueError)
