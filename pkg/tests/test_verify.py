"""The reference regression framework: statuses, pinning, mutation detection."""

from __future__ import annotations

import numpy as np

from bbfold import reference as ref
from bbfold import verify


def test_check_result_line_formatting():
    r = verify.CheckResult(3, "sample", "pass", "detail")
    assert r.line() == "[PASS] criterion 3: sample  [detail]"
    assert verify.CheckResult(1, "x", "flagged").line().startswith("[FLAG]")


def test_subset_selection_runs_only_matching_groups():
    results = verify.run_all(only="nfold")
    assert results and all(r.criterion == 9 for r in results)


def test_mutated_reference_constant_is_identified(monkeypatch):
    # a wrong action matrix in the reference data must surface as FAIL
    wrong = np.eye(3, dtype=np.uint8)
    monkeypatch.setattr(ref, "T_MATRIX_98", wrong)
    results = verify.check_worked_bases()
    assert any(r.status == "fail" and "x-action" in r.name for r in results)


def test_mutated_known_code_row_is_identified(monkeypatch):
    rows = list(ref.KNOWN_CODES)
    rows[0] = ref.KnownCode(rows[0].name, rows[0].ell, rows[0].m, rows[0].c,
                            rows[0].d, rows[0].n, rows[0].k + 1,
                            rows[0].d_reported, rows[0].pure,
                            rows[0].principal, rows[0].symmetric)
    monkeypatch.setattr(ref, "KNOWN_CODES", tuple(rows))
    results = verify.check_parameters()
    assert any(r.status == "fail" for r in results)


def test_expected_flags_are_exactly_the_recorded_discrepancies():
    flags = verify.expected_flags()
    assert len(flags) == 5
    # every flag points at a recorded discrepancy entry
    assert "98-chi-display" in ref.DISCREPANCIES
    assert "98-cz-display-block" in ref.DISCREPANCIES
    assert "162-dual-basis" in ref.DISCREPANCIES
    assert "162-gate-group-order" in ref.DISCREPANCIES


def test_fast_distance_mode_reaches_the_same_bounds():
    results = verify.check_distance(fast=True)
    assert all(r.status == "pass" for r in results)
