"""Fold-transversal Clifford gates with tableau-level verification.

Paulis are written canonically as i^phase * X^a Z^b with phase mod 4 and
a, b binary vectors over the physical qubits.  Conjugation rules used
throughout (applied qubit-wise, masks derived from the gate lists):

    H:   X -> Z, Z -> X, phase += 2 if both bits set (Y -> -Y)
    S:   z ^= x, phase += x          (X -> Y = i X Z)
    S+:  z ^= x, phase += 3 x        (X -> -Y)
    CZ:  z_p ^= x_q, z_q ^= x_p, phase += 2 x_p x_q
    SWAP/permutation: relabel bits, no phase

Multiplication: (i^p X^a Z^b)(i^q X^c Z^d) = i^{p+q+2(b.c)} X^{a+c} Z^{b+d}.
These conventions are anchored by the S S+ = identity and mutation tests
rather than any external library convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .f2la import BitMatrix, BitVec, Subspace
from .codes import BBCodeSpec, CssCode, build_bb
from .grouprings import RingAutomorphism, RingParams
from .homology import LogicalBasis, pure_logical_basis

__all__ = [
    "Pauli", "ZXDuality", "FoldGate", "CliffordTableau", "GateGroup",
    "PreservationReport", "standard_duality", "omega_duality",
    "swap_gate", "hadamard_gate", "cz_gate", "apply_to_tableau",
    "check_stabilizer_preservation", "logical_action", "enumerate_group",
    "gap_generator_file", "cayley_edges", "cayley_dot", "cayley_csv",
]


@dataclass
class Pauli:
    """i^phase * X^x Z^z on n qubits; x, z are uint8 0/1 arrays."""

    phase: int
    x: np.ndarray
    z: np.ndarray

    @classmethod
    def x_type(cls, bits: np.ndarray) -> "Pauli":
        bits = np.asarray(bits, dtype=np.uint8)
        return cls(0, bits.copy(), np.zeros_like(bits))

    @classmethod
    def z_type(cls, bits: np.ndarray) -> "Pauli":
        bits = np.asarray(bits, dtype=np.uint8)
        return cls(0, np.zeros_like(bits), bits.copy())

    def mul(self, other: "Pauli") -> "Pauli":
        phase = (self.phase + other.phase
                 + 2 * int((self.z & other.x).sum() & 1)) % 4
        return Pauli(phase, self.x ^ other.x, self.z ^ other.z)

    def copy(self) -> "Pauli":
        return Pauli(self.phase, self.x.copy(), self.z.copy())


@dataclass(frozen=True)
class ZXDuality:
    """Basis-preserving isomorphism onto the transposed complex.

    qubit_perm sends each qubit to its image; x_to_z[h] is the Z-check row
    matched by the image of X-check row h (the validity certificate).
    """

    kind: str
    qubit_perm: np.ndarray
    x_to_z: np.ndarray
    z_to_x: np.ndarray


def _match_rows(permuted: BitMatrix, target: BitMatrix) -> np.ndarray:
    lookup: dict[bytes, list[int]] = {}
    for i in range(target.rows):
        lookup.setdefault(target.words[i].tobytes(), []).append(i)
    out = np.empty(permuted.rows, dtype=np.int64)
    for i in range(permuted.rows):
        key = permuted.words[i].tobytes()
        rows = lookup.get(key)
        if not rows:
            raise ValueError(f"check row {i} has no image row: not a ZX-duality")
        out[i] = rows.pop()
    return out


def _certify_duality(code: CssCode, perm: np.ndarray, kind: str) -> ZXDuality:
    hx_dense = code.hx.to_dense()
    hz_dense = code.hz.to_dense()
    permuted_x = np.zeros_like(hx_dense)
    permuted_x[:, perm] = hx_dense
    permuted_z = np.zeros_like(hz_dense)
    permuted_z[:, perm] = hz_dense
    x_to_z = _match_rows(BitMatrix.from_dense(permuted_x), code.hz)
    z_to_x = _match_rows(BitMatrix.from_dense(permuted_z), code.hx)
    return ZXDuality(kind, perm, x_to_z, z_to_x)


def standard_duality(spec: BBCodeSpec, shift: tuple[int, int] = (0, 0)) -> ZXDuality:
    """g_h -> ((t g)^-1)_v and g_v -> ((t g)^-1)_h for the shift t."""
    params = spec.params
    lm = params.dim
    perm = np.empty(2 * lm, dtype=np.int64)
    a, b = shift
    for t in range(lm):
        i, j = params.exponents(t)
        perm[t] = lm + params.index(-(i + a), -(j + b))
        perm[lm + t] = params.index(-(i + a), -(j + b))
    kind = "tau0" if shift == (0, 0) else f"tau0*shift{shift}"
    return _certify_duality(build_bb(spec), perm, kind)


def omega_duality(spec: BBCodeSpec) -> ZXDuality:
    """Side-preserving duality g -> (omega(g))^-1, i.e. (i, j) -> (-j, -i)."""
    if not spec.is_symmetric():
        raise ValueError(
            "spec is not symmetric: need l == m and c(x,y) == d(y,x)")
    params = spec.params
    lm = params.dim
    perm = np.empty(2 * lm, dtype=np.int64)
    for t in range(lm):
        i, j = params.exponents(t)
        img = params.index(-j, -i)
        perm[t] = img
        perm[lm + t] = lm + img
    return _certify_duality(build_bb(spec), perm, "tau0*omega")


@dataclass(frozen=True)
class FoldGate:
    """Physical Clifford built from a code (anti-)automorphism.

    perm is a qubit permutation (swap-type gates and the pairing half of
    Hadamard-type gates); hadamards / s_gates / cz_pairs list single- and
    two-qubit gates with no qubit repeated inside any list.  logical is
    the induced symplectic action on (Z-basis coords | X-basis coords),
    acting on column vectors.
    """

    kind: str
    n: int
    perm: Optional[np.ndarray] = None
    hadamards: tuple[int, ...] = ()
    s_gates: tuple[tuple[int, bool], ...] = ()
    cz_pairs: tuple[tuple[int, int], ...] = ()
    logical: Optional[BitMatrix] = None

    def __post_init__(self):
        assert len(set(self.hadamards)) == len(self.hadamards)
        assert len({q for q, _ in self.s_gates}) == len(self.s_gates)
        flat = [q for pair in self.cz_pairs for q in pair]
        assert len(set(flat)) == len(flat), "qubit repeated in CZ list"

    def swaps(self) -> list[tuple[int, int]]:
        """Disjoint transpositions when the permutation is an involution."""
        if self.perm is None:
            return []
        p = self.perm
        if not np.array_equal(p[p], np.arange(self.n)):
            raise ValueError("permutation is not an involution; "
                             "no transversal swap-list form exists")
        return [(q, int(p[q])) for q in range(self.n) if q < p[q]]

    def conjugate(self, pauli: Pauli) -> Pauli:
        """Image of pauli under conjugation by this gate."""
        x, z, phase = pauli.x.copy(), pauli.z.copy(), pauli.phase
        if self.s_gates:
            plus = np.zeros(self.n, dtype=np.uint8)
            minus = np.zeros(self.n, dtype=np.uint8)
            for q, dagger in self.s_gates:
                (minus if dagger else plus)[q] = 1
            phase += int((x & plus).sum()) + 3 * int((x & minus).sum())
            z ^= x & (plus | minus)
        if self.cz_pairs:
            partner = np.arange(self.n)
            mask = np.zeros(self.n, dtype=np.uint8)
            for p, q in self.cz_pairs:
                partner[p], partner[q] = q, p
                mask[p] = mask[q] = 1
            x_partner = x[partner]
            phase += int((x & x_partner & mask).sum())
            z ^= x_partner & mask
        if self.hadamards:
            hmask = np.zeros(self.n, dtype=np.uint8)
            hmask[list(self.hadamards)] = 1
            phase += 2 * int((x & z & hmask).sum())
            x, z = (x & ~hmask) | (z & hmask), (z & ~hmask) | (x & hmask)
        if self.perm is not None:
            nx, nz = np.empty_like(x), np.empty_like(z)
            nx[self.perm], nz[self.perm] = x, z
            x, z = nx, nz
        return Pauli(phase % 4, x, z)


@dataclass
class CliffordTableau:
    """Images of the generators X_q (rows 0..N-1) and Z_q (rows N..2N-1)."""

    n: int
    xs: np.ndarray      # (2N, N) x-parts
    zs: np.ndarray      # (2N, N) z-parts
    phases: np.ndarray  # (2N,) mod 4

    @classmethod
    def identity(cls, n: int) -> "CliffordTableau":
        eye = np.eye(n, dtype=np.uint8)
        zero = np.zeros((n, n), dtype=np.uint8)
        return cls(n, np.vstack([eye, zero]), np.vstack([zero, eye]),
                   np.zeros(2 * n, dtype=np.int64))

    def row(self, i: int) -> Pauli:
        return Pauli(int(self.phases[i]), self.xs[i].copy(), self.zs[i].copy())

    def apply(self, pauli: Pauli) -> Pauli:
        """Conjugate an arbitrary Pauli: expand over generator images."""
        acc = Pauli(pauli.phase, np.zeros(self.n, dtype=np.uint8),
                    np.zeros(self.n, dtype=np.uint8))
        for q in np.nonzero(pauli.x)[0]:
            acc = acc.mul(self.row(int(q)))
        for q in np.nonzero(pauli.z)[0]:
            acc = acc.mul(self.row(self.n + int(q)))
        return acc

    def then(self, second: "CliffordTableau") -> "CliffordTableau":
        """Tableau of (second after self)."""
        rows = [second.apply(self.row(i)) for i in range(2 * self.n)]
        return CliffordTableau(
            self.n,
            np.stack([r.x for r in rows]),
            np.stack([r.z for r in rows]),
            np.array([r.phase for r in rows], dtype=np.int64),
        )

    def symplectic_matrix(self) -> BitMatrix:
        """2N x 2N matrix with rows (x-part | z-part) of the images."""
        return BitMatrix.from_dense(np.hstack([self.xs, self.zs]))

    def is_symplectic(self) -> bool:
        m = np.hstack([self.xs, self.zs]).astype(np.int64)
        omega = np.block([
            [np.zeros((self.n, self.n), dtype=np.int64), np.eye(self.n, dtype=np.int64)],
            [np.eye(self.n, dtype=np.int64), np.zeros((self.n, self.n), dtype=np.int64)],
        ])
        return bool(np.array_equal(m @ omega @ m.T % 2, omega))


def apply_to_tableau(gate: FoldGate, n: int) -> CliffordTableau:
    """Conjugate every generator Pauli through the gate."""
    for q in gate.hadamards:
        if q >= n:
            raise ValueError("gate qubit out of range")
    ident = CliffordTableau.identity(n)
    rows = [gate.conjugate(ident.row(i)) for i in range(2 * n)]
    tab = CliffordTableau(
        n,
        np.stack([r.x for r in rows]),
        np.stack([r.z for r in rows]),
        np.array([r.phase for r in rows], dtype=np.int64),
    )
    if not tab.is_symplectic():
        raise AssertionError("gate conjugation violated the symplectic condition")
    return tab


@dataclass(frozen=True)
class PreservationReport:
    ok: bool
    failures: tuple[tuple[str, int, int, bool, bool], ...]

    def describe(self) -> str:
        if self.ok:
            return "stabilizer group preserved (all checks, phase +1)"
        side, idx, phase, x_ok, z_ok = self.failures[0]
        return (f"{len(self.failures)} check(s) not preserved; first: "
                f"{side}-check {idx}, residual phase i^{phase}, "
                f"x-part in span: {x_ok}, z-part in span: {z_ok}")


def check_stabilizer_preservation(code: CssCode,
                                  tableau: CliffordTableau) -> PreservationReport:
    """Every check must map to a +1-phase product of checks.

    The image of each check row is canonicalized as i^phase X^a Z^b; it is
    a stabilizer product exactly when phase = 0, a lies in the row space
    of H_X and b in the row space of H_Z.
    """
    hx_space = Subspace.from_matrix(code.n, code.hx)
    hz_space = Subspace.from_matrix(code.n, code.hz)
    failures = []
    hx_dense = code.hx.to_dense()
    hz_dense = code.hz.to_dense()
    for side, dense, mk in (("X", hx_dense, Pauli.x_type),
                            ("Z", hz_dense, Pauli.z_type)):
        for idx in range(dense.shape[0]):
            img = tableau.apply(mk(dense[idx]))
            x_ok = hx_space.contains(BitVec.from_bits(img.x))
            z_ok = hz_space.contains(BitVec.from_bits(img.z))
            if img.phase != 0 or not x_ok or not z_ok:
                failures.append((side, idx, img.phase, x_ok, z_ok))
    return PreservationReport(not failures, tuple(failures))


def logical_action(code: CssCode, basis: LogicalBasis,
                   tableau: CliffordTableau) -> BitMatrix:
    """Symplectic image of the gate in the given logical basis.

    Columns are images of (z_1..z_k, x_1..x_k); coefficients are read off
    through the dual pairing and the residual is asserted to be a
    stabilizer.  The result satisfies M^T Omega M = Omega for
    Omega = [[0, I], [I, 0]].
    """
    k = basis.k
    zmat = basis.z_matrix().to_dense()
    xmat = basis.x_matrix().to_dense()
    hx_space = Subspace.from_matrix(code.n, code.hx)
    hz_space = Subspace.from_matrix(code.n, code.hz)
    cols = np.zeros((2 * k, 2 * k), dtype=np.uint8)
    sources = [Pauli.z_type(zmat[i]) for i in range(k)]
    sources += [Pauli.x_type(xmat[i]) for i in range(k)]
    for j, src in enumerate(sources):
        img = tableau.apply(src)
        lam = (img.z @ xmat.T) % 2   # coefficients over the Z-classes
        mu = (img.x @ zmat.T) % 2    # coefficients over the X-classes
        cols[:k, j] = lam
        cols[k:, j] = mu
        res_x = img.x ^ (mu @ xmat % 2).astype(np.uint8)
        res_z = img.z ^ (lam @ zmat % 2).astype(np.uint8)
        if not (hx_space.contains(BitVec.from_bits(res_x))
                and hz_space.contains(BitVec.from_bits(res_z))):
            raise AssertionError("image does not decompose over basis + stabilizers")
    mat = BitMatrix.from_dense(cols)
    omega = np.block([[np.zeros((k, k), dtype=int), np.eye(k, dtype=int)],
                      [np.eye(k, dtype=int), np.zeros((k, k), dtype=int)]])
    m = cols.astype(np.int64)
    if not np.array_equal(m.T @ omega @ m % 2, omega):
        raise AssertionError("logical action is not symplectic")
    return mat


def _automorphism_perm(spec: BBCodeSpec, phi: RingAutomorphism) -> np.ndarray:
    """Qubit permutation of a code automorphism (shift and/or omega)."""
    if phi.antipode:
        raise ValueError("the antipode is not a code automorphism")
    params = spec.params
    if phi.swap and not spec.is_symmetric():
        raise ValueError("omega is a code automorphism only for symmetric specs")
    lm = params.dim
    perm = np.empty(2 * lm, dtype=np.int64)
    a, b = phi.shift
    for t in range(lm):
        i, j = params.exponents(t)
        if phi.swap:
            img, side_swap = params.index(j + a, i + b), True
        else:
            img, side_swap = params.index(i + a, j + b), False
        perm[t] = img + (lm if side_swap else 0)
        perm[lm + t] = img + (0 if side_swap else lm)
    return perm


def swap_gate(spec: BBCodeSpec, phi: RingAutomorphism,
              basis: Optional[LogicalBasis] = None, *,
              with_logical: bool = True) -> FoldGate:
    """Qubit-permutation gate of a code automorphism (shift or omega).

    Stabilizer preservation is exact: the permutation maps check rows to
    check rows, which is verified by row matching.
    """
    code = build_bb(spec)
    perm = _automorphism_perm(spec, phi)
    hx_dense = code.hx.to_dense()
    permuted = np.zeros_like(hx_dense)
    permuted[:, perm] = hx_dense
    _match_rows(BitMatrix.from_dense(permuted), code.hx)
    name = "swap"
    if phi.swap:
        name += "_omega"
    if phi.shift != (0, 0):
        name += f"_shift{phi.shift}"
    gate = FoldGate(kind=name, n=code.n, perm=perm)
    return _with_logical(gate, spec, code, basis, with_logical=with_logical)


def hadamard_gate(spec: BBCodeSpec, basis: Optional[LogicalBasis] = None, *,
                  with_logical: bool = True) -> FoldGate:
    """Transversal Hadamards composed with the standard-duality pairing."""
    code = build_bb(spec)
    duality = standard_duality(spec)
    gate = FoldGate(kind="hadamard", n=code.n, perm=duality.qubit_perm,
                    hadamards=tuple(range(code.n)))
    tab = apply_to_tableau(gate, code.n)
    report = check_stabilizer_preservation(code, tab)
    if not report.ok:
        raise AssertionError(f"Hadamard-type gate failed: {report.describe()}")
    return _with_logical(gate, spec, code, basis, tab, with_logical=with_logical)


def cz_gate(spec: BBCodeSpec, basis: Optional[LogicalBasis] = None, *,
            with_logical: bool = True) -> FoldGate:
    """Phase-type gate of the side-preserving duality on a symmetric spec.

    Fixed points of g -> omega(g)^-1 receive S on the horizontal and S+ on
    the vertical copy; each two-element orbit contributes CZ pairs on both
    sides, anchored at the lexicographically smaller representative.
    Stabilizer preservation is verified with full phase tracking.
    """
    if not spec.is_symmetric():
        raise ValueError(
            "spec is not symmetric: need l == m and c(x,y) == d(y,x)")
    params = spec.params
    code = build_bb(spec)
    lm = params.dim
    s_gates: list[tuple[int, bool]] = []
    cz_pairs: list[tuple[int, int]] = []
    for t in range(lm):
        i, j = params.exponents(t)
        img = params.index(-j, -i)
        if img == t:
            s_gates.append((t, False))        # S on the horizontal copy
            s_gates.append((lm + t, True))    # S-dagger on the vertical copy
        elif t < img:
            cz_pairs.append((t, img))
            cz_pairs.append((lm + t, lm + img))
    gate = FoldGate(kind="cz", n=code.n, s_gates=tuple(s_gates),
                    cz_pairs=tuple(cz_pairs))
    tab = apply_to_tableau(gate, code.n)
    report = check_stabilizer_preservation(code, tab)
    if not report.ok:
        raise AssertionError(f"CZ-type gate failed: {report.describe()}")
    return _with_logical(gate, spec, code, basis, tab, with_logical=with_logical)


def _with_logical(gate: FoldGate, spec: BBCodeSpec, code: CssCode,
                  basis: Optional[LogicalBasis],
                  tab: Optional[CliffordTableau] = None, *,
                  with_logical: bool = True) -> FoldGate:
    if not with_logical:
        return gate
    if basis is None:
        basis = pure_logical_basis(spec)
    if tab is None:
        tab = apply_to_tableau(gate, code.n)
    logical = logical_action(code, basis, tab)
    return FoldGate(gate.kind, gate.n, gate.perm, gate.hadamards,
                    gate.s_gates, gate.cz_pairs, logical)


@dataclass(frozen=True)
class GateGroup:
    """Closure of a symplectic generator set under multiplication.

    element_list holds the elements in breadth-first discovery order, which
    is deterministic for a fixed generator list.
    """

    dimension: int
    order: int
    generators: tuple[BitMatrix, ...]
    elements: frozenset[bytes]
    element_list: tuple[bytes, ...]

    def contains_matrix(self, m: BitMatrix) -> bool:
        return m.to_dense().tobytes() in self.elements

    def element(self, idx: int) -> np.ndarray:
        return np.frombuffer(self.element_list[idx], dtype=np.uint8).reshape(
            self.dimension, self.dimension)


def enumerate_group(generators: Sequence[BitMatrix], *,
                    ceiling: int = 10_000_000) -> GateGroup:
    """Breadth-first closure of the generated matrix group.

    Elements are hashed by their dense byte serialization; the exact matrix
    is what is stored, so hash collisions are impossible.  Raises if the
    group grows beyond the ceiling, reporting the partial count.
    """
    if not generators:
        raise ValueError("need at least one generator")
    dim = generators[0].rows
    gens_dense = []
    for g in generators:
        if g.rows != dim or g.cols != dim:
            raise ValueError("generators must be square of equal dimension")
        _assert_symplectic(g)
        gens_dense.append(g.to_dense().astype(np.int64))
    eye = np.eye(dim, dtype=np.uint8)
    seen: set[bytes] = {eye.tobytes()}
    ordered: list[bytes] = [eye.tobytes()]
    frontier = [eye]
    while frontier:
        stack = np.stack(frontier).astype(np.int64)
        new: list[np.ndarray] = []
        for g in gens_dense:
            prods = np.matmul(stack, g) % 2
            for p in prods.astype(np.uint8):
                key = p.tobytes()
                if key not in seen:
                    seen.add(key)
                    ordered.append(key)
                    new.append(p)
                    if len(seen) > ceiling:
                        raise RuntimeError(
                            f"group enumeration exceeded ceiling {ceiling}; "
                            f"partial count {len(seen)}")
        frontier = new
    return GateGroup(dim, len(seen), tuple(generators), frozenset(seen),
                     tuple(ordered))


def cayley_edges(group: GateGroup):
    """Edges (source index, generator index, target index) of the Cayley graph."""
    index = {key: i for i, key in enumerate(group.element_list)}
    gens = [g.to_dense().astype(np.int64) for g in group.generators]
    for src, key in enumerate(group.element_list):
        elem = np.frombuffer(key, dtype=np.uint8).reshape(
            group.dimension, group.dimension).astype(np.int64)
        for gi, g in enumerate(gens):
            dst = index[(elem @ g % 2).astype(np.uint8).tobytes()]
            yield src, gi, dst


def cayley_dot(group: GateGroup) -> str:
    lines = ["digraph cayley {"]
    for src, gi, dst in cayley_edges(group):
        lines.append(f'  {src} -> {dst} [label="g{gi}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def cayley_csv(group: GateGroup) -> str:
    lines = ["source,generator,target"]
    lines += [f"{src},g{gi},{dst}" for src, gi, dst in cayley_edges(group)]
    return "\n".join(lines) + "\n"


def _assert_symplectic(m: BitMatrix) -> None:
    k = m.rows // 2
    omega = np.block([[np.zeros((k, k), dtype=int), np.eye(k, dtype=int)],
                      [np.eye(k, dtype=int), np.zeros((k, k), dtype=int)]])
    dense = m.to_dense().astype(np.int64)
    if not np.array_equal(dense.T @ omega @ dense % 2, omega):
        raise ValueError("generator is not symplectic")


def gap_generator_file(generators: Sequence[BitMatrix]) -> str:
    """GAP-readable definition of the generator list over GF(2)."""
    mats = []
    for g in generators:
        rows = ", ".join(
            "[" + ", ".join(str(int(b)) + "*Z(2)^0" for b in row) + "]"
            for row in g.to_dense())
        mats.append(f"[{rows}]")
    return "gens := [\n" + ",\n".join(mats) + "\n];\n"
