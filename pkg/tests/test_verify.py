"""Report plumbing and the cheap verification suites.

The heavy suites (characters, walks, typicality, hypercubic) run once in
the acceptance tests; here we exercise the fast ones plus the report
format and the family filter.
"""

import json

import pytest

from ortk import manifest
from ortk.verify import ReportEntry, VerificationReport, run_suite


def test_iso_suite_passes_with_expected_counts():
    report = run_suite("iso")
    assert len(report.entries) == len(manifest.ISO_SUITE)
    assert report.passed
    got = [(e.parameters["family"], e.parameters["m"], e.parameters["n"])
           for e in report.entries]
    want = [(c.family, c.m, c.n) for c in manifest.ISO_SUITE]
    assert got == want
    for e in report.entries:
        assert e.payload["vertices"] == e.payload["expected"]


def test_exchange_and_extension_cover_the_grid():
    ex = run_suite("exchange")
    xt = run_suite("extension")
    n_expected = len(manifest.grid_families()) + manifest.grid_size()
    assert len(ex.entries) == n_expected
    assert len(xt.entries) == n_expected
    assert ex.passed and xt.passed
    assert all(e.check == "exchange" for e in ex.entries)
    assert all(e.check == "rainbow-extension" for e in xt.entries)
    # OR(g) rows come first, without a lambda parameter
    n_families = len(manifest.grid_families())
    assert all("lambda" not in e.parameters for e in ex.entries[:n_families])
    assert all("lambda" in e.parameters for e in ex.entries[n_families:])


def test_family_filter():
    report = run_suite("iso", "gl")
    assert len(report.entries) == 5
    assert all(e.parameters["family"] == "gl" for e in report.entries)
    report = run_suite("exchange", "d21alpha")
    assert len(report.entries) == 1 + 4
    assert report.passed


def test_unknown_mode_rejected():
    with pytest.raises(ValueError):
        run_suite("everything")


def test_report_json_shape():
    report = run_suite("exchange", "gl11n")
    data = report.to_json()
    assert data["schema"] == 1
    assert data["overall"] == "pass"
    assert len(data["entries"]) == len(report.entries)
    for row in data["entries"]:
        assert set(row) == {"check", "parameters", "status", "payload"}
        assert row["status"] in ("pass", "fail", "skipped")
    # serializable with sorted keys, byte-identical across runs
    text1 = json.dumps(data, sort_keys=True)
    text2 = json.dumps(run_suite("exchange", "gl11n").to_json(), sort_keys=True)
    assert text1 == text2


def test_overall_fail_logic():
    good = ReportEntry("x", {}, "pass")
    skip = ReportEntry("y", {}, "skipped")
    bad = ReportEntry("z", {}, "fail", {"why": "synthetic"})
    assert VerificationReport([good, skip]).passed
    r = VerificationReport([good, bad])
    assert not r.passed
    assert r.to_json()["overall"] == "fail"


def test_d21_worked_example_entries():
    report = run_suite("all", "d21alpha")
    assert report.passed
    by_check = {e.check: e for e in report.entries}
    assert by_check["d21-rho-b3"].payload["rho"] == "0,0,0"
    assert by_check["d21-rho-b1"].payload["rho"] == "-1,1,1"
    assert by_check["d21-pure-roots"].payload["pure"] == [
        "2d", "2e1", "2e2", "d+e1+e2"]
    assert by_check["d21-tree-shape"].payload["degrees"] == [1, 1, 1, 3]
