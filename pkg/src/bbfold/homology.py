"""Logical-operator structure of two-block codes.

The homology H of the complex R -> R_h (+) R_v -> R is analyzed through
ideal arithmetic: the four-term exact sequence relating H to quotients of
(c), (d), ann(c), ann(d) decides purity, single generators of the
annihilator ideals decide principality, and principal codes get explicit
symplectically paired bases of logical operators.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .f2la import BitMatrix, BitVec, Subspace, kernel_basis, preimage_basis, rank, rref
from .codes import BBCodeSpec, CssCode, build_bb
from .grouprings import (
    GeneratorSearchInconclusive,
    Ideal,
    RingElem,
    RingParams,
    annihilator,
    elem,
    elem_times_ideal,
    find_principal_generator,
    ideal_generated,
    ideal_intersection,
    mul_matrix,
)

__all__ = [
    "LogicalClass", "PurityReport", "LogicalBasis", "SemiperiodicData",
    "PrincipalityReport", "homology_space", "purity_check",
    "principality_check", "semiperiodic_generator", "detect_semiperiodic",
    "semiperiodic_min_weight",
    "pure_logical_basis", "basis_from_classes", "logical_action_of_multiplication",
]


@dataclass(frozen=True)
class LogicalClass:
    """Representative (f, g) on horizontal/vertical qubits with c*f = d*g."""

    f: RingElem
    g: RingElem

    def vector(self) -> BitVec:
        bits = np.concatenate([self.f.grid.reshape(-1), self.g.grid.reshape(-1)])
        return BitVec.from_bits(bits)

    @classmethod
    def from_vector(cls, params: RingParams, v: BitVec) -> "LogicalClass":
        bits = v.to_bits()
        lm = params.dim
        return cls(RingElem(params, bits[:lm].reshape(params.ell, params.m)),
                   RingElem(params, bits[lm:].reshape(params.ell, params.m)))

    def is_cycle(self, spec: BBCodeSpec) -> bool:
        return (spec.c * self.f) == (spec.d * self.g)


def homology_space(spec: BBCodeSpec) -> tuple[Subspace, Subspace, int]:
    """(cycles, boundaries, k) for the Z-logical side."""
    code = build_bb(spec)
    cycles = kernel_basis(code.hx)
    boundaries = Subspace.from_matrix(code.n, code.hz)
    return cycles, boundaries, cycles.dim - boundaries.dim


def _m_subspace_one_sided(spec: BBCodeSpec, ann_cd: Ideal) -> Subspace:
    """M = {r in ann(cd) : r*d in ann(c)(d)}, the one-sided description."""
    ann_c_d = elem_times_ideal(spec.d, annihilator(spec.c))
    pre = preimage_basis(mul_matrix(spec.d), ann_c_d.space)
    return pre.intersection(ann_cd.space)


def m_subspace_two_sided(spec: BBCodeSpec) -> Subspace:
    """Both defining conditions of M, for cross-checking the one-sided form."""
    ann_cd = annihilator(spec.c * spec.d)
    ann_c_d = elem_times_ideal(spec.d, annihilator(spec.c))
    ann_d_c = elem_times_ideal(spec.c, annihilator(spec.d))
    pre_d = preimage_basis(mul_matrix(spec.d), ann_c_d.space)
    pre_c = preimage_basis(mul_matrix(spec.c), ann_d_c.space)
    return pre_d.intersection(pre_c).intersection(ann_cd.space)


@dataclass(frozen=True)
class PurityReport:
    pure: bool
    direct_sum: bool
    dim_tor1: int        # (c) cap (d) / (cd)
    dim_tor2: int        # ann(cd) / M
    dim_h_pure_h: int    # ann(c) / ann(c)(d)
    dim_h_pure_v: int    # ann(d) / (c) ann(d)
    dim_h: int

    def exactness_identity(self) -> bool:
        return self.dim_h == (self.dim_h_pure_h + self.dim_h_pure_v
                              - self.dim_tor2 + self.dim_tor1)


def purity_check(spec: BBCodeSpec) -> PurityReport:
    """Decide purity via the exact sequence term (c) cap (d) / (cd).

    direct_sum additionally requires ann(cd) = M.  The alternating-sum
    dimension identity of the four-term exact sequence is asserted.
    """
    c, d = spec.c, spec.d
    ideal_c = ideal_generated([c])
    ideal_d = ideal_generated([d])
    ideal_cd = ideal_generated([c * d])
    ann_c = annihilator(c)
    ann_d = annihilator(d)
    ann_cd = annihilator(c * d)

    inter = ideal_intersection(ideal_c, ideal_d)
    dim_tor1 = inter.dim - ideal_cd.dim
    m_space = _m_subspace_one_sided(spec, ann_cd)
    dim_tor2 = ann_cd.dim - m_space.dim
    dim_pure_h = ann_c.dim - elem_times_ideal(d, ann_c).dim
    dim_pure_v = ann_d.dim - elem_times_ideal(c, ann_d).dim
    _, _, k = homology_space(spec)

    report = PurityReport(
        pure=(dim_tor1 == 0),
        direct_sum=(dim_tor1 == 0 and dim_tor2 == 0),
        dim_tor1=dim_tor1,
        dim_tor2=dim_tor2,
        dim_h_pure_h=dim_pure_h,
        dim_h_pure_v=dim_pure_v,
        dim_h=k,
    )
    if not report.exactness_identity():
        raise AssertionError(f"exact-sequence dimension identity violated: {report}")
    return report


@dataclass(frozen=True)
class PrincipalityReport:
    pure: bool
    principal: Optional[bool]       # None means inconclusive witness search
    p: Optional[RingElem]
    q: Optional[RingElem]
    notes: tuple[str, ...] = ()


def _transposed(a: RingElem) -> RingElem:
    """The image of a under the ring isomorphism x <-> y (any grid shape)."""
    return RingElem(RingParams(a.params.m, a.params.ell), a.grid.T.copy())


def _mirrored_semiperiodic_generator(target: RingElem) -> Optional[RingElem]:
    """Generator of ann(target) when target = y^k + zeta(x) with k | m."""
    flipped = _transposed(target)
    shape = detect_semiperiodic(flipped)
    if shape is None:
        return None
    data = _semiperiodic_data(flipped.params, flipped, shape)
    gen = _transposed(data.p)
    if ideal_generated([gen], target.params) != annihilator(target):
        raise AssertionError("mirrored periodic generator failed to match ann")
    return gen


def _annihilator_generator(spec: BBCodeSpec, which: str) -> tuple[Optional[RingElem], list[str]]:
    """Generator of ann(c) or ann(d), trying the periodic closed forms first."""
    target = spec.c if which == "c" else spec.d
    notes: list[str] = []
    shape = detect_semiperiodic(target)
    if shape is not None:
        data = _semiperiodic_data(spec.params, target, shape)
        notes.append(f"ann({which}) generator from the periodic closed form")
        return data.p, notes
    mirrored = _mirrored_semiperiodic_generator(target)
    if mirrored is not None:
        notes.append(f"ann({which}) generator from the mirrored periodic closed form")
        return mirrored, notes
    gen = find_principal_generator(annihilator(target))
    return gen, notes


def principality_check(spec: BBCodeSpec) -> PrincipalityReport:
    """Principal = pure and both ann(c), ann(d) generated by one element."""
    purity = purity_check(spec)
    if not purity.pure:
        return PrincipalityReport(False, False, None, None,
                                  ("not pure, ann generators not searched",))
    notes: list[str] = []
    gens: list[Optional[RingElem]] = []
    try:
        for which in ("c", "d"):
            gen, more = _annihilator_generator(spec, which)
            notes.extend(more)
            gens.append(gen)
            if gen is None:
                return PrincipalityReport(True, False, None, None,
                                          (*notes, f"ann({which}) is not principal"))
    except GeneratorSearchInconclusive as exc:
        return PrincipalityReport(True, None, None, None, (*notes, str(exc)))
    return PrincipalityReport(True, True, gens[0], gens[1], tuple(notes))


# -- semiperiodic annihilators ------------------------------------------------

def _poly_mod(a: int, b: int) -> int:
    """Remainder of binary-coefficient polynomial division (ints as bit rows)."""
    db = b.bit_length() - 1
    while a.bit_length() - 1 >= db and a:
        a ^= b << (a.bit_length() - 1 - db)
    return a


def _poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _poly_mod(a, b)
    return a


def _poly_divexact(a: int, b: int) -> int:
    q = 0
    db = b.bit_length() - 1
    while a:
        shift = a.bit_length() - 1 - db
        if shift < 0:
            raise ValueError("inexact polynomial division")
        q |= 1 << shift
        a ^= b << shift
    return q


def _poly_weight(a: int) -> int:
    return bin(a).count("1")


def _univariate_y(a: RingElem) -> int:
    """Encode a y-only element as an integer polynomial (bit j = coeff y^j)."""
    if np.any(a.grid[1:]):
        raise ValueError("element is not a polynomial in y alone")
    return int(sum(1 << j for j in range(a.params.m) if a.grid[0, j]))


def _y_poly_elem(params: RingParams, poly: int) -> RingElem:
    return elem(params, [(0, j) for j in range(poly.bit_length()) if (poly >> j) & 1])


@dataclass(frozen=True)
class SemiperiodicShape:
    k: int
    kprime: int
    zeta: RingElem


def detect_semiperiodic(c: RingElem) -> Optional[SemiperiodicShape]:
    """Split c = x^k + zeta(y) with k | l, or None if no such split exists.

    The x-part may be the constant monomial (interpreted as k = l).  When
    several support points lie on the x-axis at most one split can be valid,
    since the remainder must be supported on the y-axis only.
    """
    params = c.params
    support = c.support()
    axis_x = [(i, j) for i, j in support if j == 0]
    for i, j in axis_x:
        k = params.ell if i == 0 else i
        if params.ell % k != 0:
            continue
        rest = [p for p in support if p != (i, j)]
        if all(pi == 0 for pi, _ in rest):
            zeta = elem(params, rest)
            return SemiperiodicShape(k, params.ell // k, zeta)
    return None


@dataclass(frozen=True)
class SemiperiodicData:
    k: int
    kprime: int
    zeta: RingElem
    chi: RingElem
    g: RingElem
    p: RingElem
    d_chi: int
    degenerate: bool = False


def _semiperiodic_data(params: RingParams, c: RingElem,
                       shape: SemiperiodicShape) -> SemiperiodicData:
    m = params.m
    k, kprime, zeta = shape.k, shape.kprime, shape.zeta
    chi = (zeta ** kprime) + RingElem.one(params)
    chi_poly = _univariate_y(chi)
    ym1 = (1 << m) | 1
    if chi_poly == 0:
        chi_bar = ym1
    else:
        chi_bar = _poly_gcd(chi_poly, ym1)
    g_full = _poly_divexact(ym1, chi_bar)
    g_poly = 0 if g_full == ym1 else g_full  # y^m - 1 is 0 in the quotient
    g_elem = _y_poly_elem(params, g_poly)
    p = RingElem.zero(params)
    for i in range(kprime):
        p = p + (RingElem.monomial(params, params.ell - i * k, 0)
                 * (zeta ** i) * g_elem)
    d_chi = _cyclic_code_distance(m, g_poly)
    data = SemiperiodicData(k, kprime, zeta, chi, g_elem, p, d_chi,
                            degenerate=zeta.is_zero())
    if ideal_generated([p], params) != annihilator(c):
        raise AssertionError("periodic generator formula failed to match ann(c)")
    return data


def _cyclic_code_distance(m: int, g_poly: int, *, max_dim: int = 20) -> int:
    """Exhaustive minimum weight of the cyclic code (g) in F2[y]/(y^m - 1)."""
    if g_poly == 0:
        return 0
    deg = g_poly.bit_length() - 1
    dim = m - deg
    if dim <= 0:
        return 0
    if dim > max_dim:
        raise ValueError(f"cyclic code dimension {dim} exceeds exhaustive cap")
    mask = (1 << m) - 1
    shifts = []
    for s in range(dim):
        shifts.append(g_poly << s)
    best = m + 1
    for sel in range(1, 1 << dim):
        word = 0
        t = sel
        while t:
            low = (t & -t).bit_length() - 1
            word ^= shifts[low]
            t &= t - 1
        word = (word & mask) ^ (word >> m)  # fold y^m back onto 1 (y^m = 1)
        w = _poly_weight(word)
        if 0 < w < best:
            best = w
    return best


def semiperiodic_generator(params: RingParams, c: RingElem) -> SemiperiodicData:
    """Explicit generator of ann(c) for c = x^k + zeta(y) with k | l.

    chi = zeta^{l/k} + 1, g = (y^m - 1)/gcd(chi, y^m - 1), and
    P = sum_i x^{l - i k} zeta^i g.  The construction is asserted against
    the kernel computation of ann(c), and d_chi is the exhaustively
    computed distance of the cyclic code generated by g.
    """
    if c.params != params:
        raise ValueError("ring parameter mismatch")
    shape = detect_semiperiodic(c)
    if shape is None:
        raise ValueError(
            "polynomial is not semiperiodic: need exactly one monomial x^k "
            "with k | l and all remaining support on the y-axis")
    return _semiperiodic_data(params, c, shape)


def semiperiodic_min_weight(data: SemiperiodicData, *, max_dim: int = 20) -> int:
    """Exact minimum weight of the periodic annihilator code.

    Every codeword splits into y-polynomial layers f_j = zeta^j * a with
    a in ann(chi), so the minimum weight is min over nonzero a of
    sum_i |zeta^i a|.  Enumeration over ann(chi) is capped at 2^max_dim;
    larger codes fall back to the k'*d_chi / k'*m sandwich bounds.
    """
    params = data.zeta.params
    g_poly = _univariate_y(data.g)
    if g_poly == 0:
        raise ValueError("degenerate periodic code: the annihilator is zero")
    dim = params.m - (g_poly.bit_length() - 1)
    if dim > max_dim:
        raise ValueError(f"ann(chi) dimension {dim} exceeds the exhaustive cap")
    zeta_powers = [data.zeta ** i for i in range(data.kprime)]
    shifts = [data.g.shift(0, s) for s in range(dim)]
    best = data.kprime * params.m + 1
    for mask in range(1, 1 << dim):
        a = RingElem.zero(params)
        t = mask
        while t:
            a = a + shifts[(t & -t).bit_length() - 1]
            t &= t - 1
        total = sum((zp * a).weight() for zp in zeta_powers)
        if 0 < total < best:
            best = total
    return best


# -- logical bases ------------------------------------------------------------

@dataclass(frozen=True)
class LogicalBasis:
    """Symplectically paired Z- and X-logical representatives.

    z_classes[i] pairs with x_classes[i]; the pairing matrix (overlap
    parities) is the identity.  X-classes live on the dual complex: they
    commute with all Z-checks and are independent modulo X-checks.
    """

    spec: BBCodeSpec
    z_classes: tuple[LogicalClass, ...]
    x_classes: tuple[LogicalClass, ...]

    @property
    def k(self) -> int:
        return len(self.z_classes)

    def z_matrix(self) -> BitMatrix:
        return BitMatrix.from_rows([z.vector() for z in self.z_classes])

    def x_matrix(self) -> BitMatrix:
        return BitMatrix.from_rows([x.vector() for x in self.x_classes])

    def pairing(self) -> BitMatrix:
        zs = [z.vector() for z in self.z_classes]
        xs = [x.vector() for x in self.x_classes]
        dense = np.array([[z.dot(x) for x in xs] for z in zs], dtype=np.uint8)
        return BitMatrix.from_dense(dense)


def _gf2_inverse(m: BitMatrix) -> BitMatrix:
    aug = m.augment(BitMatrix.identity(m.rows))
    red, pivots = rref(aug)
    if list(pivots) != list(range(m.rows)):
        raise ValueError("matrix is singular over GF(2)")
    return BitMatrix.from_dense(red.to_dense()[:, m.rows:])


def _check_z_side(code: CssCode, vectors: Sequence[BitVec]) -> None:
    mat = BitMatrix.from_rows(list(vectors))
    for v in vectors:
        if not code.hx.mul_vec(v).is_zero():
            raise AssertionError("logical representative is not a cycle")
    if rank(code.hz.stack(mat)) != rank(code.hz) + len(vectors):
        raise AssertionError("logical classes dependent modulo boundaries "
                             "(purity/principality inconsistency)")


def coset_representatives(params: RingParams, ideal: Ideal,
                          count: Optional[int] = None) -> list[RingElem]:
    """Greedy monomial representatives of a basis of R/I in row-major order."""
    reps: list[RingElem] = []
    space = ideal.space
    target = count if count is not None else params.dim - ideal.dim
    for t in range(params.dim):
        if len(reps) == target:
            break
        i, j = params.exponents(t)
        mono = RingElem.monomial(params, i, j)
        cand = space.sum(Subspace.from_vectors(params.dim, [mono.vec()]))
        if cand.dim > space.dim:
            reps.append(mono)
            space = cand
    return reps


def pure_logical_basis(spec: BBCodeSpec) -> LogicalBasis:
    """Basis {[f_i P, 0]} u {[0, f_i Q]} with a true dual X-basis.

    f_i are greedy monomial coset representatives of R/(c, d).  The X-side
    starts from the standard-duality images of the Z-basis and is corrected
    by the inverse Gram matrix so that the pairing becomes the identity.
    """
    pr = principality_check(spec)
    if not pr.principal:
        raise ValueError(f"code is not principal: {pr.notes}")
    params = spec.params
    code = build_bb(spec)
    reps = coset_representatives(params, ideal_generated([spec.c, spec.d]))
    zero = RingElem.zero(params)
    z_classes = [LogicalClass(f * pr.p, zero) for f in reps]
    z_classes += [LogicalClass(zero, f * pr.q) for f in reps]
    if 2 * len(reps) != code.k:
        raise ValueError(
            f"{2 * len(reps)} pure classes for k = {code.k}: the quotient map "
            "is not injective here, so no pure basis of this shape exists")
    _check_z_side(code, [z.vector() for z in z_classes])

    x_candidates = [LogicalClass(z.g.antipode(), z.f.antipode()) for z in z_classes]
    k = len(z_classes)
    gram = np.array([[z.vector().dot(x.vector()) for x in x_candidates]
                     for z in z_classes], dtype=np.uint8)
    ginv = _gf2_inverse(BitMatrix.from_dense(gram)).to_dense()
    x_classes = []
    for j in range(k):
        f, g = RingElem.zero(params), RingElem.zero(params)
        for t in range(k):
            if ginv[t, j]:
                f, g = f + x_candidates[t].f, g + x_candidates[t].g
        x_classes.append(LogicalClass(f, g))

    basis = LogicalBasis(spec, tuple(z_classes), tuple(x_classes))
    _validate_basis(basis, code)
    return basis


def basis_from_classes(spec: BBCodeSpec, z_classes: Sequence[LogicalClass],
                       x_classes: Sequence[LogicalClass]) -> LogicalBasis:
    """Wrap externally supplied representatives, validating all invariants."""
    basis = LogicalBasis(spec, tuple(z_classes), tuple(x_classes))
    _validate_basis(basis, build_bb(spec))
    return basis


def _validate_basis(basis: LogicalBasis, code: CssCode) -> None:
    _check_z_side(code, [z.vector() for z in basis.z_classes])
    dual = CssCode(code.n, code.hz, code.hx, code.qubit_labels)
    _check_z_side(dual, [x.vector() for x in basis.x_classes])
    if basis.pairing() != BitMatrix.identity(basis.k):
        raise AssertionError("pairing of the supplied bases is not the identity")


def logical_action_of_multiplication(basis: LogicalBasis, generator: str) -> BitMatrix:
    """Matrix of the shift action on H in the Z-basis (columns are images).

    The image of each representative is re-expressed through the dual
    pairing; the residual is asserted to be a boundary.
    """
    if generator not in ("x", "y"):
        raise ValueError("generator must be 'x' or 'y'")
    shift = (1, 0) if generator == "x" else (0, 1)
    code = build_bb(basis.spec)
    boundaries = Subspace.from_matrix(code.n, code.hz)
    k = basis.k
    cols = np.zeros((k, k), dtype=np.uint8)
    for j, z in enumerate(basis.z_classes):
        shifted = LogicalClass(z.f.shift(*shift), z.g.shift(*shift)).vector()
        coeffs = np.array([shifted.dot(x.vector()) for x in basis.x_classes],
                          dtype=np.uint8)
        cols[:, j] = coeffs
        residual = shifted
        for t in range(k):
            if coeffs[t]:
                residual = residual ^ basis.z_classes[t].vector()
        if not boundaries.contains(residual):
            raise AssertionError("shifted class does not reduce to the basis")
    return BitMatrix.from_dense(cols)
