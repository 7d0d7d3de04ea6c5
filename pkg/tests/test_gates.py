"""Dualities, fold gates, phase-tracked tableaux, logical actions, groups."""

from __future__ import annotations

import numpy as np
import pytest

from bbfold.codes import BBCodeSpec, build_bb
from bbfold.f2la import BitMatrix
from bbfold.gates import (
    CliffordTableau, FoldGate, Pauli, apply_to_tableau,
    check_stabilizer_preservation, cz_gate, enumerate_group,
    gap_generator_file, hadamard_gate, logical_action, omega_duality,
    standard_duality, swap_gate,
)
from bbfold.grouprings import RingAutomorphism, RingParams, parse_elem
from bbfold.homology import pure_logical_basis
from bbfold.verify import build_gate_set_98


def make_spec(cs, ds, ell, m):
    params = RingParams(ell, m)
    return BBCodeSpec(params, parse_elem(params, cs), parse_elem(params, ds))


TORIC = make_spec("1 + x", "1 + y", 3, 3)
SPEC98 = make_spec("x + y^3 + y^4", "y + x^3 + x^4", 7, 7)


# -- dense-unitary oracle for the conjugation rules -----------------------------

H2 = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
S2 = np.diag([1, 1j]).astype(complex)
X2 = np.array([[0, 1], [1, 0]], dtype=complex)
Z2 = np.diag([1, -1]).astype(complex)
I2 = np.eye(2, dtype=complex)


def kron_list(ops):
    out = np.array([[1]], dtype=complex)
    for o in ops:
        out = np.kron(out, o)
    return out


def pauli_matrix(p: Pauli, n: int) -> np.ndarray:
    mx = kron_list([X2 if p.x[q] else I2 for q in range(n)])
    mz = kron_list([Z2 if p.z[q] else I2 for q in range(n)])
    return (1j ** p.phase) * mx @ mz


def gate_unitary(g: FoldGate, n: int) -> np.ndarray:
    u = np.eye(2 ** n, dtype=complex)
    for q, dag in g.s_gates:
        s = S2.conj().T if dag else S2
        u = kron_list([s if t == q else I2 for t in range(n)]) @ u
    if g.cz_pairs:
        diag = np.ones(2 ** n, dtype=complex)
        for idx in range(2 ** n):
            bits = [(idx >> (n - 1 - q)) & 1 for q in range(n)]
            for p, q in g.cz_pairs:
                if bits[p] and bits[q]:
                    diag[idx] *= -1
        u = np.diag(diag) @ u
    for q in g.hadamards:
        u = kron_list([H2 if t == q else I2 for t in range(n)]) @ u
    if g.perm is not None:
        pm = np.zeros((2 ** n, 2 ** n), dtype=complex)
        for idx in range(2 ** n):
            bits = [(idx >> (n - 1 - q)) & 1 for q in range(n)]
            nb = [0] * n
            for q in range(n):
                nb[g.perm[q]] = bits[q]
            pm[sum(b << (n - 1 - q) for q, b in enumerate(nb)), idx] = 1
        u = pm @ u
    return u


def random_fold_gate(rng, n) -> FoldGate:
    kind = rng.integers(0, 5)
    if kind == 0:
        qs = rng.choice(n, size=int(rng.integers(1, n + 1)), replace=False)
        return FoldGate("t", n, hadamards=tuple(sorted(int(q) for q in qs)))
    if kind == 1:
        qs = rng.permutation(n)[:2]
        return FoldGate("t", n, s_gates=(
            (int(qs[0]), bool(rng.integers(0, 2))),
            (int(qs[1]), bool(rng.integers(0, 2)))))
    if kind == 2:
        qs = rng.permutation(n)
        return FoldGate("t", n, cz_pairs=((int(qs[0]), int(qs[1])),))
    if kind == 3:
        return FoldGate("t", n, perm=rng.permutation(n))
    return FoldGate("t", n, perm=rng.permutation(n), hadamards=tuple(range(n)))


def test_conjugation_matches_dense_unitaries():
    rng = np.random.default_rng(22)
    n = 3
    for _ in range(60):
        gate = random_fold_gate(rng, n)
        p = Pauli(int(rng.integers(0, 4)),
                  rng.integers(0, 2, n).astype(np.uint8),
                  rng.integers(0, 2, n).astype(np.uint8))
        img = gate.conjugate(p)
        u = gate_unitary(gate, n)
        assert np.allclose(u @ pauli_matrix(p, n) @ u.conj().T,
                           pauli_matrix(img, n))


def test_tableau_composition_matches_dense_unitaries():
    rng = np.random.default_rng(23)
    n = 3
    for _ in range(20):
        g1, g2 = random_fold_gate(rng, n), random_fold_gate(rng, n)
        t12 = apply_to_tableau(g1, n).then(apply_to_tableau(g2, n))
        p = Pauli(int(rng.integers(0, 4)),
                  rng.integers(0, 2, n).astype(np.uint8),
                  rng.integers(0, 2, n).astype(np.uint8))
        img = t12.apply(p)
        u = gate_unitary(g2, n) @ gate_unitary(g1, n)
        assert np.allclose(u @ pauli_matrix(p, n) @ u.conj().T,
                           pauli_matrix(img, n))


# -- tableau basics --------------------------------------------------------------

def test_empty_gate_gives_identity_tableau():
    tab = apply_to_tableau(FoldGate("id", 4), 4)
    ident = CliffordTableau.identity(4)
    assert np.array_equal(tab.xs, ident.xs)
    assert np.array_equal(tab.zs, ident.zs)
    assert not tab.phases.any()


def test_single_hadamard_swaps_generator_rows():
    tab = apply_to_tableau(FoldGate("h", 2, hadamards=(0,)), 2)
    assert tab.zs[0, 0] == 1 and tab.xs[0, 0] == 0   # X_0 -> Z_0
    assert tab.xs[2, 0] == 1 and tab.zs[2, 0] == 0   # Z_0 -> X_0


def test_s_then_s_dagger_is_identity_with_phases():
    s = apply_to_tableau(FoldGate("s", 2, s_gates=((0, False),)), 2)
    sd = apply_to_tableau(FoldGate("sd", 2, s_gates=((0, True),)), 2)
    both = s.then(sd)
    ident = CliffordTableau.identity(2)
    assert np.array_equal(both.xs, ident.xs)
    assert np.array_equal(both.zs, ident.zs)
    assert not both.phases.any()


# -- dualities -------------------------------------------------------------------

def test_standard_duality_certificates():
    for spec in (TORIC, SPEC98):
        duality = standard_duality(spec)
        assert duality.kind == "tau0"
        assert duality.x_to_z.shape == (spec.params.dim,)
    assert np.array_equal(standard_duality(SPEC98, (0, 0)).qubit_perm,
                          standard_duality(SPEC98).qubit_perm)


def test_standard_duality_with_shift():
    duality = standard_duality(SPEC98, (1, 2))
    lm = SPEC98.params.dim
    # g_h -> ((t g)^-1)_v for t = x y^2
    assert duality.qubit_perm[SPEC98.params.index(0, 0)] \
        == lm + SPEC98.params.index(-1, -2)


def test_omega_duality_requires_symmetry():
    with pytest.raises(ValueError, match="symmetric"):
        omega_duality(make_spec("1 + y + y^5", "y^3 + x + x^2", 3, 15))
    with pytest.raises(ValueError, match="symmetric"):
        omega_duality(make_spec("1 + x + y", "x^3 + y + y^2", 9, 9))


def test_omega_duality_fixed_points_lie_on_the_diagonal():
    duality = omega_duality(SPEC98)
    params = SPEC98.params
    lm = params.dim
    fixed_h = [q for q in range(lm) if duality.qubit_perm[q] == q]
    assert len(fixed_h) == 7
    for q in fixed_h:
        i, j = params.exponents(q)
        assert (i + j) % 7 == 0   # the (i, -i) diagonal
    assert omega_duality(make_spec("x^3 + y + y^2", "y^3 + x + x^2", 9, 9))


# -- fold gates -------------------------------------------------------------------

def test_identity_swap_gate_acts_trivially():
    basis = pure_logical_basis(TORIC)
    gate = swap_gate(TORIC, RingAutomorphism.shift_by(0, 0), basis)
    assert gate.logical == BitMatrix.identity(2 * basis.k)


def test_swap_gate_block_structure_98():
    _, basis, gates = build_gate_set_98()
    t = np.array([[0, 1, 0], [1, 0, 1], [0, 1, 1]], dtype=np.uint8)
    m = gates["swap_x"].logical.to_dense()
    assert np.array_equal(m[:3, :3], t)
    assert np.array_equal(m[3:6, 3:6], t)
    swo = gates["swap_omega"].logical.to_dense()
    i3 = np.eye(3, dtype=np.uint8)
    assert np.array_equal(swo[:3, 3:6], i3) and np.array_equal(swo[3:6, :3], i3)
    assert np.array_equal(swo[6:9, 9:12], i3) and np.array_equal(swo[9:12, 6:9], i3)


def test_hadamard_gate_exchanges_sectors():
    basis = pure_logical_basis(TORIC)
    gate = hadamard_gate(TORIC, basis)
    m = gate.logical.to_dense()
    k = basis.k
    assert not m[:k, :k].any() and not m[k:, k:].any()
    # applying the gate twice is the identity (the pairing permutation is
    # an involution and commutes with the transversal Hadamard layer)
    m64 = m.astype(np.int64)
    assert np.array_equal(m64 @ m64 % 2, np.eye(2 * k, dtype=np.int64))


def test_hadamard_gate_squares_to_identity_98():
    _, _, gates = build_gate_set_98()
    m = gates["hadamard"].logical.to_dense().astype(np.int64)
    assert np.array_equal(m @ m % 2, np.eye(12, dtype=np.int64))


def test_cz_gate_orbit_counts_98():
    _, _, gates = build_gate_set_98()
    cz = gates["cz"]
    assert len(cz.s_gates) == 2 * 7      # S/S-dagger on the 7 fixed points
    assert len(cz.cz_pairs) == 2 * 21    # CZ on the 21 two-element orbits
    assert cz.logical.to_dense()[6:, :6].sum() == 0  # Z-classes fixed


def test_cz_gate_requires_symmetric_spec():
    with pytest.raises(ValueError, match="symmetric"):
        cz_gate(make_spec("1 + y + y^5", "y^3 + x + x^2", 3, 15))


def test_cz_image_of_x_check_is_x_times_matched_z_check():
    spec, _, gates = (lambda t: t)(build_gate_set_98())
    code = build_bb(spec)
    tab = apply_to_tableau(gates["cz"], code.n)
    params = spec.params
    hx = code.hx.to_dense()
    hz = code.hz.to_dense()
    for h in range(6):   # spot-check a handful of checks
        img = tab.apply(Pauli.x_type(hx[h]))
        i, j = params.exponents(h)
        partner = params.index(-j, -i)     # omega(h)^-1
        assert img.phase == 0
        assert np.array_equal(img.x, hx[h])
        assert np.array_equal(img.z, hz[partner])


def test_swap_and_hadamard_preserve_stabilizers_everywhere():
    basis = pure_logical_basis(TORIC)
    code = build_bb(TORIC)
    for gate in (swap_gate(TORIC, RingAutomorphism.shift_by(1, 0), basis),
                 swap_gate(TORIC, RingAutomorphism.omega(), basis),
                 hadamard_gate(TORIC, basis),
                 cz_gate(TORIC, basis)):
        report = check_stabilizer_preservation(code, apply_to_tableau(gate, code.n))
        assert report.ok


def test_sabotaged_cz_gate_detected():
    spec, _, gates = build_gate_set_98()
    code = build_bb(spec)
    cz = gates["cz"]
    broken = FoldGate("broken", cz.n, cz.perm, cz.hadamards,
                      cz.s_gates[1:], cz.cz_pairs)
    report = check_stabilizer_preservation(code, apply_to_tableau(broken, cz.n))
    assert not report.ok
    assert any(phase != 0 for _, _, phase, _, _ in report.failures)


def test_logical_action_of_identity_tableau():
    basis = pure_logical_basis(TORIC)
    code = build_bb(TORIC)
    m = logical_action(code, basis, CliffordTableau.identity(code.n))
    assert m == BitMatrix.identity(2 * basis.k)


def test_logical_action_is_multiplicative():
    spec, basis, gates = build_gate_set_98()
    code = build_bb(spec)
    rng = np.random.default_rng(24)
    pool = list(gates.values())
    for _ in range(4):
        a, b = rng.choice(len(pool), 2)
        ta = apply_to_tableau(pool[a], code.n)
        tb = apply_to_tableau(pool[b], code.n)
        mab = logical_action(code, basis, ta.then(tb)).to_dense().astype(np.int64)
        ma = pool[a].logical.to_dense().astype(np.int64)
        mb = pool[b].logical.to_dense().astype(np.int64)
        assert np.array_equal(mab, mb @ ma % 2)


def test_all_gate_logicals_are_symplectic_and_shift_relations_hold():
    spec, basis, gates = build_gate_set_98()
    k = basis.k
    omega = np.block([[np.zeros((k, k), dtype=np.int64), np.eye(k, dtype=np.int64)],
                      [np.eye(k, dtype=np.int64), np.zeros((k, k), dtype=np.int64)]])
    for gate in gates.values():
        m = gate.logical.to_dense().astype(np.int64)
        assert np.array_equal(m.T @ omega @ m % 2, omega)
    sx = gates["swap_x"].logical.to_dense().astype(np.int64)
    sy = swap_gate(spec, RingAutomorphism.shift_by(0, 1), basis) \
        .logical.to_dense().astype(np.int64)
    assert np.array_equal(sx @ sy % 2, sy @ sx % 2)
    assert np.array_equal(np.linalg.matrix_power(sx, 7) % 2,
                          np.eye(2 * k, dtype=np.int64))
    assert np.array_equal(np.linalg.matrix_power(sy, 7) % 2,
                          np.eye(2 * k, dtype=np.int64))


def test_enumerate_group_extremes():
    ident = BitMatrix.identity(4)
    group = enumerate_group([ident])
    assert group.order == 1
    with pytest.raises(RuntimeError, match="ceiling"):
        _, _, gates = build_gate_set_98()
        enumerate_group([g.logical for g in gates.values()], ceiling=10)


def test_enumerate_group_rejects_non_symplectic():
    with pytest.raises(ValueError, match="symplectic"):
        enumerate_group([BitMatrix.from_dense(np.triu(np.ones((4, 4), int)))])


def test_gap_file_roundtrip_shape():
    text = gap_generator_file([BitMatrix.identity(2)])
    assert text.startswith("gens := [")
    assert "Z(2)^0" in text


def test_swap_gate_swaps_listing_for_involutions():
    _, basis, gates = build_gate_set_98()
    hadamard = gates["hadamard"]
    pairs = hadamard.swaps()
    assert len(pairs) == 49     # g_h <-> (g^-1)_v pairing
    flat = [q for pair in pairs for q in pair]
    assert len(set(flat)) == 98
    with pytest.raises(ValueError, match="involution"):
        gates["swap_x"].swaps()


def test_cayley_graph_outputs():
    from bbfold.gates import cayley_csv, cayley_dot
    basis = pure_logical_basis(TORIC)
    gates = [swap_gate(TORIC, RingAutomorphism.shift_by(1, 0), basis).logical,
             hadamard_gate(TORIC, basis).logical,
             cz_gate(TORIC, basis).logical]
    group = enumerate_group(gates)
    dot = cayley_dot(group)
    csv = cayley_csv(group)
    assert dot.startswith("digraph cayley {")
    assert csv.splitlines()[0] == "source,generator,target"
    assert len(csv.splitlines()) == 1 + group.order * len(gates)
    # edges form a permutation per generator
    import collections
    per_gen = collections.defaultdict(set)
    for line in csv.splitlines()[1:]:
        src, gen, dst = line.split(",")
        per_gen[gen].add(int(dst))
    for targets in per_gen.values():
        assert len(targets) == group.order


def test_gate_builders_can_skip_logical_action():
    gate = hadamard_gate(make_spec("x^3 + y + y^2", "y^3 + x + x^2", 6, 12),
                         with_logical=False)
    assert gate.logical is None
    assert gate.hadamards == tuple(range(144))


def _f8_mul(a, b):
    # F8 = F2[t]/(t^3 + t + 1), elements as 3-bit ints
    out = 0
    for i in range(3):
        if (b >> i) & 1:
            out ^= a << i
    for deg in (5, 4, 3):
        if (out >> deg) & 1:
            out ^= (0b1011 << (deg - 3))
    return out & 7


def _sl2_f8_order_histogram():
    import collections
    elems = []
    for a in range(8):
        for b in range(8):
            for c in range(8):
                for d in range(8):
                    det = _f8_mul(a, d) ^ _f8_mul(b, c)
                    if det == 1:
                        elems.append((a, b, c, d))
    assert len(elems) == 504

    def mul(m1, m2):
        a1, b1, c1, d1 = m1
        a2, b2, c2, d2 = m2
        return (_f8_mul(a1, a2) ^ _f8_mul(b1, c2),
                _f8_mul(a1, b2) ^ _f8_mul(b1, d2),
                _f8_mul(c1, a2) ^ _f8_mul(d1, c2),
                _f8_mul(c1, b2) ^ _f8_mul(d1, d2))

    hist = collections.Counter()
    ident = (1, 0, 0, 1)
    for m in elems:
        acc, order = m, 1
        while acc != ident:
            acc = mul(acc, m)
            order += 1
        hist[order] += 1
    return hist


def test_98_group_order_statistics_match_c2_x_sl2_f8():
    """Independent oracle for the claimed group type of the 7x7 gate group.

    The gate group must match C2 x SL2(F8) not only in order but in the
    whole element-order histogram; SL2(F8) is built directly from F8
    arithmetic and convolved with C2.
    """
    import collections
    import math
    sl2 = _sl2_f8_order_histogram()
    expected = collections.Counter()
    for o, cnt in sl2.items():
        expected[o] += cnt              # (1, g)
        expected[math.lcm(2, o)] += cnt  # (c, g)
    _, _, gates = build_gate_set_98()
    group = enumerate_group([gates[g].logical for g in
                             ("swap_x", "swap_omega", "hadamard", "cz")])
    got = collections.Counter()
    eye = np.eye(12, dtype=np.uint8)
    for key in group.element_list:
        m = np.frombuffer(key, dtype=np.uint8).reshape(12, 12)
        acc, order = m.astype(np.int64), 1
        while not np.array_equal(acc.astype(np.uint8), eye):
            acc = acc @ m % 2
            order += 1
        got[order] += 1
    assert got == expected
