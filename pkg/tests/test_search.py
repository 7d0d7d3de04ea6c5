"""Candidate enumeration, canonical forms, evaluation records, persistence."""

from __future__ import annotations

import json
from itertools import combinations

import numpy as np
import pytest

from bbfold.codes import BBCodeSpec
from bbfold.grouprings import RingElem, RingParams, elem, parse_elem
from bbfold.search import (
    SearchConfig, SearchRecord, canonical_form, enumerate_candidates,
    evaluate, run_search, spec_from_canonical,
)


def make_spec(cs, ds, ell, m):
    params = RingParams(ell, m)
    return BBCodeSpec(params, parse_elem(params, cs), parse_elem(params, ds))


def test_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(ell_values=(2,), m_values=(2,), weight_c=1, weight_d=2)
    with pytest.raises(ValueError):
        SearchConfig(ell_values=(), m_values=(2,), weight_c=2, weight_d=2)
    with pytest.raises(ValueError):
        SearchConfig(ell_values=(2,), m_values=(2,), weight_c=2, weight_d=3,
                     require_symmetric=True)


def test_enumeration_matches_brute_force_orbits_2x2():
    config = SearchConfig(ell_values=(2,), m_values=(2,), weight_c=2, weight_d=2)
    got = {canonical_form(s) for s in enumerate_candidates(config)}
    params = RingParams(2, 2)
    monos = [(i, j) for i in range(2) for j in range(2)]
    expected = set()
    for sc in combinations(monos, 2):
        for sd in combinations(monos, 2):
            expected.add(canonical_form(
                BBCodeSpec(params, elem(params, sc), elem(params, sd))))
    assert got == expected
    assert len(got) == len(list(enumerate_candidates(config)))  # no duplicates


def test_symmetric_mode_skips_rectangular_grids():
    config = SearchConfig(ell_values=(2,), m_values=(3,), weight_c=2, weight_d=2,
                          require_symmetric=True)
    assert list(enumerate_candidates(config)) == []


def test_canonical_form_is_orbit_invariant():
    rng = np.random.default_rng(25)
    for _ in range(30):
        ell = m = int(rng.integers(2, 6))
        params = RingParams(ell, m)
        while True:
            c = RingElem(params, rng.integers(0, 2, (ell, m)).astype(np.uint8))
            d = RingElem(params, rng.integers(0, 2, (ell, m)).astype(np.uint8))
            if not c.is_zero() and not d.is_zero():
                break
        spec = BBCodeSpec(params, c, d)
        base = canonical_form(spec)
        a, b = int(rng.integers(0, ell)), int(rng.integers(0, m))
        shifted = BBCodeSpec(params, c.shift(a, b), d.shift(1, 0))
        assert canonical_form(shifted) == base
        assert canonical_form(BBCodeSpec(params, c.antipode(), d.antipode())) == base
        assert canonical_form(BBCodeSpec(params, c.swap_xy(), d.swap_xy())) == base
        assert canonical_form(spec_from_canonical(base)) == base


def test_weight3_symmetric_stream_contains_the_7x7_reference_pair():
    config = SearchConfig(ell_values=(7,), m_values=(7,), weight_c=3, weight_d=3,
                          require_symmetric=True)
    keys = {canonical_form(s) for s in enumerate_candidates(config)}
    target = canonical_form(make_spec("x + y^3 + y^4", "y + x^3 + x^4", 7, 7))
    assert target in keys


def test_evaluate_short_circuits_before_isd():
    # an unsatisfiable k filter must reject without ever running trials
    config = SearchConfig(ell_values=(2,), m_values=(2,), weight_c=2, weight_d=2,
                          min_k=10**6, isd_trials=10**9)
    rec = evaluate(make_spec("1 + x", "1 + x", 2, 2), config)
    assert rec.stage == "rejected:k"
    assert rec.trials == 0 and rec.d_upper is None


def test_evaluate_records_impure_rows():
    config = SearchConfig(ell_values=(6,), m_values=(12,), weight_c=3, weight_d=3,
                          min_k=1, isd_trials=30, seed=1)
    rec = evaluate(make_spec("x^3 + y + y^2", "y^3 + x + x^2", 6, 12), config)
    assert rec.pure is False
    assert rec.k == 12


def test_record_roundtrip_and_reproducibility():
    config = SearchConfig(ell_values=(3,), m_values=(3,), weight_c=2, weight_d=2,
                          min_k=1, isd_trials=50, seed=9)
    spec = make_spec("1 + x", "1 + y", 3, 3)
    rec1 = evaluate(spec, config)
    rec2 = evaluate(spec, config)
    assert rec1.comparable() == rec2.comparable()
    assert SearchRecord.from_json(rec1.to_json()).comparable() == rec1.comparable()


def test_run_search_persists_and_resumes(tmp_path):
    out = tmp_path / "records.jsonl"
    config = SearchConfig(ell_values=(2,), m_values=(2,), weight_c=2, weight_d=2,
                          min_k=0, isd_trials=5, seed=4, out_path=str(out))
    first = run_search(config)
    assert out.exists()
    lines = [json.loads(line) for line in out.read_text().splitlines()]
    assert len(lines) == len(first) > 0
    again = run_search(config)
    assert again == []   # everything already recorded
    lines2 = out.read_text().splitlines()
    assert len(lines2) == len(lines)


def test_run_search_parallel_matches_sequential(tmp_path):
    config = SearchConfig(ell_values=(2,), m_values=(2,), weight_c=2, weight_d=2,
                          min_k=0, isd_trials=5, seed=4)
    seq = {r.c + "|" + r.d: r.comparable() for r in run_search(config)}
    par = {r.c + "|" + r.d: r.comparable() for r in run_search(config, jobs=3)}
    assert seq == par
