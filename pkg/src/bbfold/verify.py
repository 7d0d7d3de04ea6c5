"""Reference regression suite: one check list per acceptance criterion.

Each check compares computed values against the published reference data
in bbfold.reference.  Outcomes are "pass", "fail", or "flagged": flagged
means the computed value provably differs from a displayed reference
value and the mismatch itself is asserted exactly (see
reference.DISCREPANCIES), so drift in either direction turns into "fail".
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from . import reference as ref
from .codes import BBCodeSpec, build_bb, build_nfold, distance_exhaustive, distance_isd
from .f2la import BitMatrix
from .grouprings import (
    RingAutomorphism, RingElem, RingParams, annihilator, elem_times_ideal,
    format_elem, ideal_generated, ideal_intersection, mul_matrix, parse_elem,
    quotient_dim,
)
from .gates import (
    FoldGate, apply_to_tableau, check_stabilizer_preservation, cz_gate,
    enumerate_group, hadamard_gate, logical_action, swap_gate,
)
from .homology import (
    LogicalClass, basis_from_classes, logical_action_of_multiplication,
    m_subspace_two_sided, purity_check, principality_check,
    pure_logical_basis, semiperiodic_generator, semiperiodic_min_weight,
    _gf2_inverse,
)
from .search import SearchConfig, canonical_form, enumerate_candidates, evaluate

PASS, FAIL, FLAGGED = "pass", "fail", "flagged"

DEFAULT_SEED = 20250809


@dataclass(frozen=True)
class CheckResult:
    criterion: int
    name: str
    status: str
    detail: str = ""

    def line(self) -> str:
        mark = {"pass": "PASS", "fail": "FAIL", "flagged": "FLAG"}[self.status]
        suffix = f"  [{self.detail}]" if self.detail else ""
        return f"[{mark}] criterion {self.criterion}: {self.name}{suffix}"


def _spec(row: ref.KnownCode) -> BBCodeSpec:
    params = RingParams(row.ell, row.m)
    return BBCodeSpec(params, parse_elem(params, row.c), parse_elem(params, row.d))


def _result(criterion: int, name: str, ok: bool, detail: str = "") -> CheckResult:
    return CheckResult(criterion, name, PASS if ok else FAIL, detail)


def _timed(criterion: int, name: str, limit_s: float, elapsed: float) -> CheckResult:
    return _result(criterion, f"{name} runtime < {limit_s:.0f} s", elapsed < limit_s,
                   f"{elapsed:.1f} s")


# -- criterion 1: parameters ---------------------------------------------------

def check_parameters() -> list[CheckResult]:
    out = []
    t0 = time.time()
    for row in ref.KNOWN_CODES:
        code = build_bb(_spec(row))
        out.append(_result(1, f"{row.name} n, k", (code.n, code.k) == (row.n, row.k),
                           f"computed [[{code.n},{code.k}]]"))
    out.append(_timed(1, "parameter regression", 10, time.time() - t0))
    return out


# -- criterion 2: structure flags ----------------------------------------------

def check_property_flags() -> list[CheckResult]:
    out = []
    t0 = time.time()
    for row in ref.KNOWN_CODES:
        spec = _spec(row)
        purity = purity_check(spec)
        princ = principality_check(spec)
        ok = (purity.pure == row.pure and princ.principal == row.principal
              and spec.is_symmetric() == row.symmetric)
        out.append(_result(
            2, f"{row.name} pure/principal/symmetric", ok,
            f"{purity.pure}/{princ.principal}/{spec.is_symmetric()}"))
    out.append(_timed(2, "flag regression", 60, time.time() - t0))
    return out


# -- criterion 3: distance -----------------------------------------------------

def check_distance(*, seed: int = DEFAULT_SEED, fast: bool = False) -> list[CheckResult]:
    out = []
    t0 = time.time()
    toric = _spec(ref.TORIC_3x3)
    t1 = time.time()
    rep = distance_exhaustive(build_bb(toric), 3)
    out.append(_result(3, "toric 3x3 certified d = 3",
                       rep.upper_bound == 3 and rep.certified_exact,
                       f"{time.time() - t1:.2f} s"))
    targets = [("[[108,16,6]]", 6, 500), ("[[162,24,6]]", 6, 500),
               ("[[90,8,10]]", 10, 3000), ("[[98,6,12]]", 12, 3000)]
    if fast:
        targets = [(n, d, max(150, t // 10)) for n, d, t in targets]
    by_name = {row.name: row for row in ref.KNOWN_CODES}
    for name, expected, trials in targets:
        code = build_bb(_spec(by_name[name]))
        rep = distance_isd(code, trials, seed)
        out.append(_result(3, f"{name} isd upper bound = {expected} "
                              f"({trials} trials, seed {seed})",
                           rep.upper_bound == expected,
                           f"found {rep.upper_bound}"))
    out.append(_timed(3, "distance checks", 1800, time.time() - t0))
    return out


# -- criterion 4: exact sequence on random specs -------------------------------

def check_exact_sequence(count: int = 200, seed: int = 42) -> list[CheckResult]:
    t0 = time.time()
    rng = np.random.default_rng(seed)
    identity_ok = tor_ok = twosided_ok = odd_ok = 0
    odd_total = 0
    for _ in range(count):
        ell = int(rng.integers(2, 9))
        m = int(rng.integers(2, 9))
        params = RingParams(ell, m)
        while True:
            cg = rng.integers(0, 2, (ell, m)).astype(np.uint8)
            dg = rng.integers(0, 2, (ell, m)).astype(np.uint8)
            if cg.any() and dg.any():
                break
        spec = BBCodeSpec(params, RingElem(params, cg), RingElem(params, dg))
        rep = purity_check(spec)   # raises if the dimension identity fails
        identity_ok += rep.exactness_identity()
        c, d = spec.c, spec.d
        ann_c, ann_d = annihilator(c), annihilator(d)
        lhs = (ideal_intersection(ideal_generated([c]), ann_d).dim
               - elem_times_ideal(c, ann_d).dim)
        rhs = (ideal_intersection(ann_c, ideal_generated([d])).dim
               - elem_times_ideal(d, ann_c).dim)
        tor_ok += (rep.dim_tor2 == lhs == rhs)
        two = m_subspace_two_sided(spec)
        one_dim = annihilator(c * d).dim - rep.dim_tor2
        twosided_ok += (two.dim == one_dim)
        if ell % 2 and m % 2:
            odd_total += 1
            odd_ok += (rep.pure and rep.direct_sum)
    out = [
        _result(4, f"dimension identity on {count} random specs",
                identity_ok == count, f"{identity_ok}/{count}"),
        _result(4, "one-sided and two-sided descriptions of M agree",
                twosided_ok == count, f"{twosided_ok}/{count}"),
        _result(4, "torsion-term isomorphism dimensions agree",
                tor_ok == count, f"{tor_ok}/{count}"),
        _result(4, f"odd grids pure and direct sum ({odd_total} cases)",
                odd_ok == odd_total, f"{odd_ok}/{odd_total}"),
        _timed(4, "random-spec suite", 300, time.time() - t0),
    ]
    return out


# -- criterion 5: semiperiodic generators --------------------------------------

def check_semiperiodic() -> list[CheckResult]:
    out = []
    # 7x7 example
    params = RingParams(7, 7)
    c = parse_elem(params, ref.CODE98["c"])
    data = semiperiodic_generator(params, c)
    out.append(_result(5, "[[98]] generator formula: ideal(P) = ann(c)",
                       ideal_generated([data.p]) == annihilator(c)))
    out.append(_result(5, "[[98]] g(y) matches reference '1 + y'",
                       format_elem(data.g) == ref.CODE98["g"]))
    chi_computed = parse_elem(params, ref.CODE98["chi_computed"])
    chi_reference = parse_elem(params, ref.CODE98["chi_reference_text"])
    if data.chi == chi_reference:
        out.append(CheckResult(5, "[[98]] chi matches displayed reference", FAIL,
                               "displayed value unexpectedly reproduced; "
                               "discrepancy record is stale"))
    elif data.chi == chi_computed:
        out.append(CheckResult(
            5, "[[98]] chi matches displayed reference", FLAGGED,
            f"computed {format_elem(data.chi)}; see DISCREPANCIES['98-chi-display']"))
    else:
        out.append(CheckResult(5, "[[98]] chi value", FAIL,
                               f"computed {format_elem(data.chi)} matches neither "
                               "the displayed nor the recorded value"))
    ann_dim = annihilator(c).dim
    min_weight = min(
        RingElem.from_vec(params, annihilator(c).space.vector_from_coordinates(
            [(s >> t) & 1 for t in range(ann_dim)])).weight()
        for s in range(1, 1 << ann_dim))
    out.append(_result(
        5, "[[98]] distance sandwich k'm >= min-weight(ann c) >= k' d_chi",
        data.kprime * params.m >= min_weight >= data.kprime * data.d_chi,
        f"{data.kprime * params.m} >= {min_weight} >= {data.kprime * data.d_chi}"))
    # 9x9 example
    params9 = RingParams(9, 9)
    c9 = parse_elem(params9, ref.CODE162["c"])
    data9 = semiperiodic_generator(params9, c9)
    out.append(_result(5, "[[162,8,12]] generator formula: ideal(P) = ann(c)",
                       ideal_generated([data9.p]) == annihilator(c9)))
    prod = RingElem.one(params9)
    for factor in ref.CODE162["p_factors"]:
        prod = prod * parse_elem(params9, factor)
    out.append(_result(5, "[[162,8,12]] product-form generator spans the same ideal",
                       ideal_generated([prod]) == annihilator(c9)))
    min9 = semiperiodic_min_weight(data9)
    out.append(_result(
        5, "[[162,8,12]] distance sandwich k'm >= min-weight(ann c) >= k' d_chi",
        data9.kprime * params9.m >= min9 >= data9.kprime * data9.d_chi,
        f"{data9.kprime * params9.m} >= {min9} >= {data9.kprime * data9.d_chi}"))
    return out


# -- worked-example bases -------------------------------------------------------

def worked_basis_98():
    params = RingParams(7, 7)
    spec = BBCodeSpec(params, parse_elem(params, ref.CODE98["c"]),
                      parse_elem(params, ref.CODE98["d"]))
    p = semiperiodic_generator(params, spec.c).p
    q = p.swap_xy()
    zero = RingElem.zero(params)
    zmul = [parse_elem(params, s) for s in ref.CODE98["z_multipliers"]]
    xmul = [parse_elem(params, s) for s in ref.CODE98["x_multipliers"]]
    z_classes = [LogicalClass(f * p, zero) for f in zmul]
    z_classes += [LogicalClass(zero, f * q) for f in zmul]
    x_classes = [LogicalClass(f * q.antipode(), zero) for f in xmul]
    x_classes += [LogicalClass(zero, f * p.antipode()) for f in xmul]
    return spec, basis_from_classes(spec, z_classes, x_classes)


def worked_basis_162():
    params = RingParams(9, 9)
    spec = BBCodeSpec(params, parse_elem(params, ref.CODE162["c"]),
                      parse_elem(params, ref.CODE162["d"]))
    p = RingElem.one(params)
    for factor in ref.CODE162["p_factors"]:
        p = p * parse_elem(params, factor)
    zero = RingElem.zero(params)
    fs = [parse_elem(params, s) for s in ref.CODE162["z_multipliers"]]
    z_classes = [LogicalClass(f * p, zero) for f in fs]
    z_classes += [LogicalClass(zero, (f * p).swap_xy()) for f in fs]
    # duality images of the Z-basis; their Gram matrix against the Z-basis
    # is invertible but not the identity (see DISCREPANCIES['162-dual-basis'])
    cands = [LogicalClass(z.f.swap_xy().antipode(), zero) for z in z_classes[:4]]
    cands += [LogicalClass(zero, z.g.swap_xy().antipode()) for z in z_classes[4:]]
    gram = np.array([[z.vector().dot(x.vector()) for x in cands]
                     for z in z_classes], dtype=np.uint8)
    ginv = _gf2_inverse(BitMatrix.from_dense(gram)).to_dense()
    x_classes = []
    for j in range(8):
        f, g = zero, zero
        for t in range(8):
            if ginv[t, j]:
                f, g = f + cands[t].f, g + cands[t].g
        x_classes.append(LogicalClass(f, g))
    return spec, basis_from_classes(spec, z_classes, x_classes), gram


def check_worked_bases() -> list[CheckResult]:
    out = []
    spec98, basis98 = worked_basis_98()
    out.append(_result(6, "[[98]] reference dual bases pair to the identity",
                       basis98.pairing() == BitMatrix.identity(6)))
    t = ref.T_MATRIX_98
    expected = np.block([[t, np.zeros((3, 3), dtype=np.uint8)],
                         [np.zeros((3, 3), dtype=np.uint8), t]])
    ax = logical_action_of_multiplication(basis98, "x").to_dense()
    ay = logical_action_of_multiplication(basis98, "y").to_dense()
    out.append(_result(6, "[[98]] x-action equals T on both pure blocks",
                       np.array_equal(ax, expected)))
    out.append(_result(6, "[[98]] y-action equals the x-action",
                       np.array_equal(ax, ay)))
    spec162, basis162, gram = worked_basis_162()
    out.append(_result(6, "[[162,8,12]] reference basis independent mod boundaries",
                       basis162.k == 8))
    out.append(_result(6, "[[162,8,12]] dim R/(c,d) = 4",
                       quotient_dim(ideal_generated([spec162.c, spec162.d]))
                       == ref.CODE162["quotient_dim"]))
    gram_identity = np.array_equal(gram, np.eye(8, dtype=np.uint8))
    out.append(CheckResult(
        6, "[[162,8,12]] duality images form a dual basis",
        FAIL if gram_identity else FLAGGED,
        "Gram is the identity; discrepancy record is stale" if gram_identity
        else "Gram invertible but not identity; see DISCREPANCIES['162-dual-basis']"))
    return out


# -- criterion 7: gates ---------------------------------------------------------

def _displayed_matrices_98():
    t = ref.T_MATRIX_98
    ti = _gf2_inverse(BitMatrix.from_dense(t)).to_dense()  # T symmetric, so = T^-tr
    i3 = np.eye(3, dtype=np.uint8)
    z3 = np.zeros((3, 3), dtype=np.uint8)
    swap_x = np.block([[t, z3, z3, z3], [z3, t, z3, z3],
                       [z3, z3, ti, z3], [z3, z3, z3, ti]])
    swap_om = np.block([[z3, i3, z3, z3], [i3, z3, z3, z3],
                        [z3, z3, z3, i3], [z3, z3, i3, z3]])
    hada = np.block([[z3, z3, z3, t], [z3, z3, t, z3],
                     [z3, ti, z3, z3], [ti, z3, z3, z3]])
    cz_displayed = np.block([[i3, z3, t, z3], [z3, i3, z3, t],
                             [z3, z3, i3, z3], [z3, z3, z3, i3]])
    cz_corrected = np.block([[i3, z3, ti, z3], [z3, i3, z3, ti],
                             [z3, z3, i3, z3], [z3, z3, z3, i3]])
    return swap_x, swap_om, hada, cz_displayed, cz_corrected


def _matches_either_orientation(computed: BitMatrix, displayed: np.ndarray) -> bool:
    dense = computed.to_dense()
    return bool(np.array_equal(dense, displayed)
                or np.array_equal(dense.T, displayed))


def build_gate_set_98():
    spec, basis = worked_basis_98()
    return spec, basis, {
        "swap_x": swap_gate(spec, RingAutomorphism.shift_by(1, 0), basis),
        "swap_omega": swap_gate(spec, RingAutomorphism.omega(), basis),
        "hadamard": hadamard_gate(spec, basis),
        "cz": cz_gate(spec, basis),
    }


def build_gate_set_162():
    spec, basis, _ = worked_basis_162()
    return spec, basis, {
        "swap_x": swap_gate(spec, RingAutomorphism.shift_by(1, 0), basis),
        "swap_y": swap_gate(spec, RingAutomorphism.shift_by(0, 1), basis),
        "swap_omega": swap_gate(spec, RingAutomorphism.omega(), basis),
        "hadamard": hadamard_gate(spec, basis),
        "cz": cz_gate(spec, basis),
    }


def check_gates() -> list[CheckResult]:
    out = []
    # stabilizer preservation on the three reference codes
    toric_params = RingParams(3, 3)
    toric = BBCodeSpec(toric_params, parse_elem(toric_params, "1 + x"),
                       parse_elem(toric_params, "1 + y"))
    spec98, basis98, gates98 = build_gate_set_98()
    spec162, basis162, gates162 = build_gate_set_162()
    toric_basis = pure_logical_basis(toric)
    for label, spec, basis, gate_builders in (
            ("toric 3x3", toric, toric_basis, None),
            ("[[98]]", spec98, basis98, gates98),
            ("[[162,8,12]]", spec162, basis162, gates162)):
        code = build_bb(spec)
        gates = gate_builders or {
            "swap_x": swap_gate(spec, RingAutomorphism.shift_by(1, 0), basis),
            "swap_omega": swap_gate(spec, RingAutomorphism.omega(), basis),
            "hadamard": hadamard_gate(spec, basis),
            "cz": cz_gate(spec, basis),
        }
        ok = True
        for gate in gates.values():
            tab = apply_to_tableau(gate, code.n)
            ok = ok and check_stabilizer_preservation(code, tab).ok
        out.append(_result(7, f"{label}: all gate families preserve the "
                              "stabilizer group with phase tracking", ok))
    # displayed logical matrices of the 7x7 example
    swap_x_d, swap_om_d, hada_d, cz_d, cz_corr = _displayed_matrices_98()
    for name, displayed in (("swap_x", swap_x_d), ("swap_omega", swap_om_d),
                            ("hadamard", hada_d)):
        out.append(_result(7, f"[[98]] displayed [{name}] matrix reproduced",
                           _matches_either_orientation(gates98[name].logical,
                                                       displayed)))
    cz_logical = gates98["cz"].logical
    if _matches_either_orientation(cz_logical, cz_d):
        out.append(CheckResult(7, "[[98]] displayed [cz] matrix reproduced", FAIL,
                               "displayed form unexpectedly reproduced; "
                               "discrepancy record is stale"))
    else:
        corrected_ok = _matches_either_orientation(cz_logical, cz_corr)
        out.append(CheckResult(
            7, "[[98]] displayed [cz] matrix reproduced",
            FLAGGED if corrected_ok else FAIL,
            "computed matrix has T^-tr in the off-diagonal blocks; see "
            "DISCREPANCIES['98-cz-display-block']" if corrected_ok
            else "computed matrix matches neither the displayed nor the "
                 "corrected form"))
    # mutation tests
    code98 = build_bb(spec98)
    cz = gates98["cz"]
    dropped = FoldGate("cz-mutated", cz.n, cz.perm, cz.hadamards,
                       cz.s_gates[1:], cz.cz_pairs)
    rep = check_stabilizer_preservation(code98, apply_to_tableau(dropped, cz.n))
    out.append(_result(7, "mutation: dropping one S gate is detected", not rep.ok,
                       rep.describe()))
    (a, b), (c_, d_) = cz.cz_pairs[0], cz.cz_pairs[1]
    rewired = FoldGate("cz-mutated", cz.n, cz.perm, cz.hadamards, cz.s_gates,
                       ((a, c_), (b, d_)) + cz.cz_pairs[2:])
    rep = check_stabilizer_preservation(code98, apply_to_tableau(rewired, cz.n))
    out.append(_result(7, "mutation: rewiring one CZ pair is detected", not rep.ok,
                       rep.describe()))
    return out


# -- criterion 8: gate groups ---------------------------------------------------

def check_gate_groups() -> list[CheckResult]:
    out = []
    t0 = time.time()
    _, _, gates98 = build_gate_set_98()
    group98 = enumerate_group([gates98[g].logical for g in
                               ("swap_x", "swap_omega", "hadamard", "cz")])
    out.append(_result(8, f"[[98]] gate group order = {ref.GATE_GROUP_ORDER_98}",
                       group98.order == ref.GATE_GROUP_ORDER_98,
                       f"computed {group98.order}"))
    _, _, gates162 = build_gate_set_162()
    logicals = {k: g.logical.to_dense().astype(np.int64) for k, g in gates162.items()}
    full = enumerate_group([gates162[g].logical for g in
                            ("swap_x", "swap_y", "swap_omega", "hadamard", "cz")])
    swh = BitMatrix.from_dense(
        (logicals["swap_omega"] @ logicals["hadamard"]) % 2)
    sub = enumerate_group([gates162["swap_x"].logical, swh,
                           gates162["cz"].logical])
    for name, computed, reported in (
            ("[[162,8,12]] full gate group order", full.order,
             ref.GATE_GROUP_ORDER_162_REPORTED),
            ("[[162,8,12]] swap/hadamard/cz subgroup order", sub.order,
             ref.GATE_SUBGROUP_ORDER_162_REPORTED)):
        if computed == reported:
            out.append(CheckResult(8, f"{name} = {reported}", FAIL,
                                   "reported value unexpectedly reproduced; "
                                   "discrepancy record is stale"))
        else:
            expected = (ref.GATE_GROUP_ORDER_162_COMPUTED
                        if "full" in name else ref.GATE_SUBGROUP_ORDER_162_COMPUTED)
            out.append(CheckResult(
                8, f"{name} = {reported}",
                FLAGGED if computed == expected else FAIL,
                f"computed {computed}; see DISCREPANCIES['162-gate-group-order']"
                if computed == expected else
                f"computed {computed}, expected frozen value {expected}"))
    out.append(_timed(8, "group enumeration", 120, time.time() - t0))
    return out


# -- criterion 9: n-fold builder ------------------------------------------------

def check_nfold() -> list[CheckResult]:
    out = []
    params = RingParams(3, 3)
    c = parse_elem(params, "1 + x")
    d = parse_elem(params, "1 + y")
    e = parse_elem(params, "1 + x*y")
    _, code2 = build_nfold(params, [c, d], 1)
    bb = build_bb(BBCodeSpec(params, c, d))
    out.append(_result(9, "2-fold output bit-identical to the direct builder",
                       code2.hx == bb.hx and code2.hz == bb.hz
                       and code2.qubit_labels == bb.qubit_labels))
    complex3, _ = build_nfold(params, [c, d, e], 1)
    ok = True
    for lo, hi in zip(complex3.differentials, complex3.differentials[1:]):
        ok = ok and not (lo @ hi).words.any()
    out.append(_result(9, "3-fold consecutive differentials vanish", ok))
    em, cm, dm = (mul_matrix(v).to_dense() for v in (e, c, d))
    z = np.zeros_like(em)
    middle = np.block([[em, z, cm], [z, em, dm], [dm, cm, z]])
    out.append(_result(9, "3-fold middle differential matches the reference "
                          "block layout",
                       np.array_equal(complex3.differentials[1].to_dense(),
                                      middle)))
    return out


# -- criterion 10: search reproduction -------------------------------------------

def check_search(*, trials: int = 800, seed: int = 11) -> list[CheckResult]:
    out = []
    t0 = time.time()
    config = SearchConfig(ell_values=(7,), m_values=(7,), weight_c=3, weight_d=3,
                          require_symmetric=True, min_k=6, min_d_bound=0,
                          isd_trials=trials, seed=seed)
    params = RingParams(7, 7)
    target = BBCodeSpec(params, parse_elem(params, ref.CODE98["c"]),
                        parse_elem(params, ref.CODE98["d"]))
    target_key = canonical_form(target)
    keys = {canonical_form(s) for s in enumerate_candidates(config)}
    out.append(_result(10, "search space contains the canonical 7x7 weight-3 pair",
                       target_key in keys, f"{len(keys)} candidate classes"))
    rec1 = evaluate(target, config)
    rec2 = evaluate(target, config)
    out.append(_result(10, "evaluation record reproducible from its seed",
                       rec1.comparable() == rec2.comparable()))
    out.append(_result(10, "record matches the reference row",
                       rec1.stage == "accepted" and rec1.k == 6
                       and rec1.d_upper == 12 and rec1.pure and rec1.principal
                       and rec1.symmetric,
                       f"k={rec1.k} d<={rec1.d_upper} stage={rec1.stage}"))
    out.append(_timed(10, "search reproduction", 600, time.time() - t0))
    return out


ALL_CHECKS: tuple[tuple[str, Callable[[], list[CheckResult]]], ...] = (
    ("parameters", check_parameters),
    ("flags", check_property_flags),
    ("distance", check_distance),
    ("sequence", check_exact_sequence),
    ("semiperiodic", check_semiperiodic),
    ("bases", check_worked_bases),
    ("gates", check_gates),
    ("groups", check_gate_groups),
    ("nfold", check_nfold),
    ("search", check_search),
)


def run_all(only: Optional[str] = None, *, fast: bool = False) -> list[CheckResult]:
    results: list[CheckResult] = []
    for name, fn in ALL_CHECKS:
        if only and only not in name:
            continue
        if name == "distance":
            results.extend(check_distance(fast=fast))
        else:
            results.extend(fn())
    return results


def expected_flags() -> set[str]:
    """Names of the checks that are expected to be flagged, never passing."""
    return {
        "[[98]] chi matches displayed reference",
        "[[162,8,12]] duality images form a dual basis",
        "[[98]] displayed [cz] matrix reproduced",
        f"[[162,8,12]] full gate group order = {ref.GATE_GROUP_ORDER_162_REPORTED}",
        f"[[162,8,12]] swap/hadamard/cz subgroup order = "
        f"{ref.GATE_SUBGROUP_ORDER_162_REPORTED}",
    }
