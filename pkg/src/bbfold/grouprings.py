"""Arithmetic and ideal theory in R = F2[x,y]/(x^l - 1, y^m - 1).

R is the group algebra of Z/l x Z/m over GF(2).  Elements are stored as
l x m coefficient grids, entry (i, j) being the coefficient of x^i y^j.
Vectors use the fixed row-major monomial order index(i, j) = i*m + j.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Optional, Sequence

import numpy as np

from .f2la import BitMatrix, BitVec, Subspace, kernel_basis, rank

__all__ = [
    "RingParams", "RingElem", "Ideal", "RingAutomorphism",
    "elem", "parse_elem", "mul_matrix", "apply_automorphism",
    "ideal_generated", "annihilator", "annihilator_of_ideal", "ideal_product",
    "ideal_sum", "ideal_intersection", "quotient_dim", "quotient_dim_by_elems",
    "find_principal_generator", "semisimple_decomposition",
    "GeneratorSearchInconclusive",
]


@dataclass(frozen=True)
class RingParams:
    """Grid sizes (l, m) fixing the ring R = F2[x,y]/(x^l-1, y^m-1)."""

    ell: int
    m: int

    def __post_init__(self):
        if self.ell < 1 or self.m < 1:
            raise ValueError(f"grid sizes must be positive, got {self.ell}, {self.m}")

    @property
    def dim(self) -> int:
        return self.ell * self.m

    def index(self, i: int, j: int) -> int:
        return (i % self.ell) * self.m + (j % self.m)

    def exponents(self, idx: int) -> tuple[int, int]:
        return divmod(idx, self.m)


class RingElem:
    """Element of R as an l x m coefficient bit grid (immutable)."""

    __slots__ = ("params", "grid")

    def __init__(self, params: RingParams, grid: np.ndarray):
        if grid.shape != (params.ell, params.m):
            raise ValueError(f"grid shape {grid.shape} != ({params.ell}, {params.m})")
        self.params = params
        self.grid = np.ascontiguousarray(grid, dtype=np.uint8) & 1
        self.grid.flags.writeable = False

    @classmethod
    def zero(cls, params: RingParams) -> "RingElem":
        return cls(params, np.zeros((params.ell, params.m), dtype=np.uint8))

    @classmethod
    def one(cls, params: RingParams) -> "RingElem":
        return cls.monomial(params, 0, 0)

    @classmethod
    def monomial(cls, params: RingParams, i: int, j: int) -> "RingElem":
        grid = np.zeros((params.ell, params.m), dtype=np.uint8)
        grid[i % params.ell, j % params.m] = 1
        return cls(params, grid)

    @classmethod
    def from_vec(cls, params: RingParams, v: BitVec) -> "RingElem":
        return cls(params, v.to_bits().reshape(params.ell, params.m))

    def vec(self) -> BitVec:
        return BitVec.from_bits(self.grid.reshape(-1))

    def support(self) -> list[tuple[int, int]]:
        return [(int(i), int(j)) for i, j in zip(*np.nonzero(self.grid))]

    def weight(self) -> int:
        return int(self.grid.sum())

    def is_zero(self) -> bool:
        return not self.grid.any()

    def __add__(self, other: "RingElem") -> "RingElem":
        self._check(other)
        return RingElem(self.params, self.grid ^ other.grid)

    def __mul__(self, other: "RingElem") -> "RingElem":
        """Cyclic 2D convolution over GF(2)."""
        self._check(other)
        acc = np.zeros_like(self.grid)
        for i, j in self.support():
            acc ^= np.roll(other.grid, (i, j), axis=(0, 1))
        return RingElem(self.params, acc)

    def __pow__(self, n: int) -> "RingElem":
        if n < 0:
            raise ValueError("negative powers are not defined for general elements")
        out = RingElem.one(self.params)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, a: int, b: int) -> "RingElem":
        """Multiply by the monomial x^a y^b."""
        return RingElem(self.params, np.roll(self.grid, (a % self.params.ell,
                                                         b % self.params.m), axis=(0, 1)))

    def antipode(self) -> "RingElem":
        """Send each monomial g to its group inverse g^-1."""
        grid = np.roll(self.grid[::-1, ::-1], (1, 1), axis=(0, 1))
        return RingElem(self.params, grid)

    def swap_xy(self) -> "RingElem":
        """Exchange the roles of x and y; requires a square grid."""
        if self.params.ell != self.params.m:
            raise ValueError("swap-xy needs l == m")
        return RingElem(self.params, self.grid.T.copy())

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RingElem)
            and self.params == other.params
            and bool(np.array_equal(self.grid, other.grid))
        )

    def __hash__(self) -> int:
        return hash((self.params, self.grid.tobytes()))

    def __str__(self) -> str:
        return format_elem(self)

    def __repr__(self) -> str:
        return f"RingElem({self.params.ell}x{self.params.m}: {format_elem(self)})"

    def _check(self, other: "RingElem") -> None:
        if self.params != other.params:
            raise ValueError("ring parameter mismatch")


def elem(params: RingParams, monomials: Iterable[tuple[int, int]]) -> RingElem:
    """Sum of monomials x^i y^j; exponents reduce mod (l, m), pairs add mod 2."""
    grid = np.zeros((params.ell, params.m), dtype=np.uint8)
    for i, j in monomials:
        grid[i % params.ell, j % params.m] ^= 1
    return RingElem(params, grid)


def parse_elem(params: RingParams, text: str) -> RingElem:
    """Parse a polynomial like 'x + y^3 + y^4' or '1 + x*y^2'."""
    text = text.strip()
    if text in ("", "0"):
        return RingElem.zero(params)
    pairs = []
    for raw in text.split("+"):
        term = raw.strip()
        if not term:
            raise ValueError(f"empty term in polynomial: {text!r}")
        compact = term.replace(" ", "").replace("*", "")
        if compact == "1":
            pairs.append((0, 0))
            continue
        i = j = 0
        pos = 0
        while pos < len(compact):
            var = compact[pos]
            if var not in "xy":
                raise ValueError(f"cannot parse term {term!r}")
            pos += 1
            exp = 1
            if pos < len(compact) and compact[pos] == "^":
                mnum = re.match(r"-?\d+", compact[pos + 1:])
                if not mnum:
                    raise ValueError(f"missing exponent in term {term!r}")
                exp = int(mnum.group())
                pos += 1 + len(mnum.group())
            if var == "x":
                i += exp
            else:
                j += exp
        pairs.append((i, j))
    return elem(params, pairs)


def format_elem(a: RingElem) -> str:
    """Canonical text form: terms sorted by ascending x- then y-degree."""
    terms = []
    for i, j in sorted(a.support()):
        if i == 0 and j == 0:
            terms.append("1")
            continue
        parts = []
        if i == 1:
            parts.append("x")
        elif i > 1:
            parts.append(f"x^{i}")
        if j == 1:
            parts.append("y")
        elif j > 1:
            parts.append(f"y^{j}")
        terms.append("*".join(parts))
    return " + ".join(terms) if terms else "0"


def mul_matrix(a: RingElem) -> BitMatrix:
    """Matrix of multiplication by a in the monomial basis.

    Satisfies mul_matrix(a) @ vec(b) = vec(a * b) in the row-major order.
    """
    params = a.params
    n = params.dim
    dense = np.zeros((n, n), dtype=np.uint8)
    base = a.grid
    for col in range(n):
        i, j = params.exponents(col)
        dense[:, col] = np.roll(base, (i, j), axis=(0, 1)).reshape(-1)
    return BitMatrix.from_dense(dense)


@dataclass(frozen=True)
class RingAutomorphism:
    """Composite of the generators: shift by x^a y^b, antipode, swap-xy."""

    shift: tuple[int, int] = (0, 0)
    antipode: bool = False
    swap: bool = False

    @classmethod
    def shift_by(cls, a: int, b: int) -> "RingAutomorphism":
        return cls(shift=(a, b))

    @classmethod
    def iota(cls) -> "RingAutomorphism":
        return cls(antipode=True)

    @classmethod
    def omega(cls) -> "RingAutomorphism":
        return cls(swap=True)


def apply_automorphism(phi: RingAutomorphism, a: RingElem) -> RingElem:
    """Apply swap-xy, then antipode, then the monomial shift."""
    out = a
    if phi.swap:
        out = out.swap_xy()
    if phi.antipode:
        out = out.antipode()
    if phi.shift != (0, 0):
        out = out.shift(*phi.shift)
    return out


@dataclass(frozen=True)
class Ideal:
    """F2-subspace of R closed under multiplication by x and y."""

    params: RingParams
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim

    def basis_elems(self) -> list[RingElem]:
        return [RingElem.from_vec(self.params, self.space.basis.row(i))
                for i in range(self.dim)]

    def contains(self, a: RingElem) -> bool:
        return self.space.contains(a.vec())

    def is_shift_closed(self) -> bool:
        for b in self.basis_elems():
            if not (self.space.contains(b.shift(1, 0).vec())
                    and self.space.contains(b.shift(0, 1).vec())):
                return False
        return True

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Ideal) and self.params == other.params
                and self.space == other.space)

    def __hash__(self) -> int:
        return hash((self.params, self.space))


def ideal_generated(gens: Sequence[RingElem],
                    params: Optional[RingParams] = None) -> Ideal:
    """Ideal spanned by all monomial shifts of the generators."""
    if not gens and params is None:
        raise ValueError("need params for the empty generating set")
    params = params or gens[0].params
    vecs: list[BitVec] = []
    for g in gens:
        if g.params != params:
            raise ValueError("ring parameter mismatch")
        for a in range(params.ell):
            for b in range(params.m):
                vecs.append(g.shift(a, b).vec())
    return Ideal(params, Subspace.from_vectors(params.dim, vecs))


def annihilator(a: RingElem) -> Ideal:
    """ann(a) = {r in R : r*a = 0}, the kernel of multiplication by a."""
    return Ideal(a.params, kernel_basis(mul_matrix(a)))


def annihilator_of_ideal(ideal: Ideal) -> Ideal:
    """ann(I) = {r : r*I = 0}, the intersection of ann over a basis of I."""
    params = ideal.params
    if ideal.dim == 0:
        return Ideal(params, Subspace.full(params.dim))
    stacked = reduce(BitMatrix.stack, [mul_matrix(b) for b in ideal.basis_elems()])
    return Ideal(params, kernel_basis(stacked))


def ideal_product(i1: Ideal, j1: Ideal) -> Ideal:
    """Span of pairwise products of basis elements (shift-closed by construction)."""
    if i1.params != j1.params:
        raise ValueError("ring parameter mismatch")
    params = i1.params
    vecs = [(a * b).vec() for a in i1.basis_elems() for b in j1.basis_elems()]
    return Ideal(params, Subspace.from_vectors(params.dim, vecs))


def ideal_sum(i1: Ideal, j1: Ideal) -> Ideal:
    if i1.params != j1.params:
        raise ValueError("ring parameter mismatch")
    return Ideal(i1.params, i1.space.sum(j1.space))


def ideal_intersection(i1: Ideal, j1: Ideal) -> Ideal:
    if i1.params != j1.params:
        raise ValueError("ring parameter mismatch")
    return Ideal(i1.params, i1.space.intersection(j1.space))


def elem_times_ideal(a: RingElem, ideal: Ideal) -> Ideal:
    """The ideal a*I = {a*r : r in I} (equals (a) I since I is shift-closed)."""
    vecs = [(a * b).vec() for b in ideal.basis_elems()]
    return Ideal(ideal.params, Subspace.from_vectors(ideal.params.dim, vecs))


def quotient_dim(ideal: Ideal) -> int:
    """dim R/I."""
    return ideal.params.dim - ideal.dim


def quotient_dim_by_elems(gens: Sequence[RingElem]) -> int:
    return quotient_dim(ideal_generated(gens))


class GeneratorSearchInconclusive(RuntimeError):
    """The ideal is principal but no explicit generator was located."""


def _odd_part(n: int) -> int:
    while n % 2 == 0:
        n //= 2
    return n


def _quotient_module(params: RingParams, numer: Subspace, denom: Subspace):
    """Coordinates of numer/denom plus the reduced representative matrix.

    Returns (qdim, rep_space) where rep_space is the RREF span of the
    denominator-reduced basis vectors of numer; coordinates in the quotient
    are taken with respect to rep_space after reduction by denom.
    """
    reduced = [denom.reduce(numer.basis.row(i)) for i in range(numer.dim)]
    rep_space = Subspace.from_vectors(params.dim, reduced)
    return rep_space.dim, rep_space


def _monomial_actions_on_quotient(params: RingParams, ideal: Ideal,
                                  sub: Subspace, ell1: int, m1: int):
    """Action of the monomials x^a y^b (a < ell1, b < m1) on I / sub.

    Yields ((a, b), action matrix of shape (q, q)) where q = dim I/sub and
    coordinates are with respect to the reduced representative basis.
    """
    qdim, reps = _quotient_module(params, ideal.space, sub)
    rep_elems = [RingElem.from_vec(params, reps.basis.row(i)) for i in range(qdim)]
    actions = {}
    for a in range(ell1):
        for b in range(m1):
            cols = np.zeros((qdim, qdim), dtype=np.uint8)
            for j, r in enumerate(rep_elems):
                img = sub.reduce(r.shift(a, b).vec())
                cols[:, j] = reps.coordinates(img)
            actions[(a, b)] = cols
    return qdim, reps, actions


def _nilradical_reduction(ideal: Ideal):
    """Return (ell1, m1, NI) for the nilradical N = (x^ell1 + 1, y^m1 + 1).

    ell1, m1 are the odd parts of l, m; NI is the subspace N*I.
    """
    params = ideal.params
    ell1, m1 = _odd_part(params.ell), _odd_part(params.m)
    gens = []
    if ell1 != params.ell:
        gens.append(elem(params, [(ell1, 0), (0, 0)]))
    if m1 != params.m:
        gens.append(elem(params, [(0, m1), (0, 0)]))
    ni = Subspace.zero(params.dim)
    for g in gens:
        vecs = [(g * b).vec() for b in ideal.basis_elems()]
        ni = ni.sum(Subspace.from_vectors(params.dim, vecs))
    return ell1, m1, ni


def is_principal(ideal: Ideal) -> bool:
    """Certified test whether the ideal is generated by a single element.

    Reduces modulo the nilradical N (Nakayama: I is cyclic over R iff I/NI
    is cyclic over the semisimple quotient R/N) and then compares dim I/NI
    with dim of (R/N)/ann(I/NI); over a product of fields equality holds
    exactly for cyclic modules.
    """
    params = ideal.params
    if ideal.dim == 0:
        return True
    ell1, m1, ni = _nilradical_reduction(ideal)
    qdim, _, actions = _monomial_actions_on_quotient(params, ideal, ni, ell1, m1)
    if qdim == 0:
        # I = NI with N nilpotent forces I = 0, handled above.
        raise AssertionError("nontrivial ideal equal to its nilradical multiple")
    flat = np.stack([actions[(a, b)].reshape(-1)
                     for a in range(ell1) for b in range(m1)])
    ann_dim = ell1 * m1 - rank(BitMatrix.from_dense(flat))
    return qdim == ell1 * m1 - ann_dim


def _generates_quotient(params: RingParams, cand: RingElem, ni: Subspace,
                        reps: Subspace, qdim: int, ell1: int, m1: int) -> bool:
    rows = np.zeros((ell1 * m1, qdim), dtype=np.uint8)
    for idx, (a, b) in enumerate((a, b) for a in range(ell1) for b in range(m1)):
        rows[idx] = reps.coordinates(ni.reduce(cand.shift(a, b).vec()))
    return rank(BitMatrix.from_dense(rows)) == qdim


def find_principal_generator(ideal: Ideal, *, attempts: int = 4096,
                             rng_seed: int = 0xBB) -> Optional[RingElem]:
    """Some P with (P) = I, or None if certified that no generator exists.

    Candidates are drawn from the ideal itself: basis vectors in order of
    increasing weight first, then seeded random combinations, with a full
    enumeration fallback for small ideals.  Each candidate is tested by the
    dimension of its shift-span inside I/NI (sufficient by Nakayama); the
    returned witness is re-verified with a full shift-span rank.
    """
    params = ideal.params
    if ideal.dim == 0:
        return RingElem.zero(params)
    if not is_principal(ideal):
        return None
    ell1, m1, ni = _nilradical_reduction(ideal)
    qdim, reps = _quotient_module(params, ideal.space, ni)

    def ok(cand: RingElem) -> bool:
        return not cand.is_zero() and _generates_quotient(
            params, cand, ni, reps, qdim, ell1, m1)

    def verify(cand: RingElem) -> RingElem:
        assert ideal_generated([cand]) == ideal
        return cand

    basis = sorted(ideal.basis_elems(), key=lambda e: e.weight())
    for cand in basis:
        if ok(cand):
            return verify(cand)
    rng = np.random.default_rng((rng_seed, params.ell, params.m, ideal.dim))
    for _ in range(attempts):
        coeffs = rng.integers(0, 2, size=ideal.dim, dtype=np.uint8)
        v = ideal.space.vector_from_coordinates(coeffs)
        if ok(RingElem.from_vec(params, v)):
            return verify(RingElem.from_vec(params, v))
    if ideal.dim <= 18:
        for mask in range(1, 1 << ideal.dim):
            coeffs = [(mask >> t) & 1 for t in range(ideal.dim)]
            v = ideal.space.vector_from_coordinates(coeffs)
            if ok(RingElem.from_vec(params, v)):
                return verify(RingElem.from_vec(params, v))
    raise GeneratorSearchInconclusive(
        f"ideal of dim {ideal.dim} passed the principality test but no "
        f"witness was found in {attempts} random draws")


def _multiplicative_order(base: int, modulus: int) -> int:
    if modulus == 1:
        return 1
    if math.gcd(base, modulus) != 1:
        raise ValueError(f"{base} is not invertible mod {modulus}")
    k, acc = 1, base % modulus
    while acc != 1:
        acc = acc * base % modulus
        k += 1
    return k


def _totient(n: int) -> int:
    out, p, nn = n, 2, n
    while p * p <= nn:
        if nn % p == 0:
            while nn % p == 0:
                nn //= p
            out -= out // p
        p += 1
    if nn > 1:
        out -= out // nn
    return out


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def semisimple_decomposition(params: RingParams) -> list[int]:
    """Multiset of field extension degrees in R = (+) F_{2^{n_i}} for odd l, m.

    Per divisor pair (d | l, d' | m), x^l - 1 contributes phi(d)/ord_2(d)
    factors of F_{2^{ord_2(d)}} and the tensor product of two field
    extensions splits as F_{2^a} (x) F_{2^b} = (F_{2^lcm(a,b)})^gcd(a,b).
    """
    if params.ell % 2 == 0 or params.m % 2 == 0:
        raise ValueError("semisimple decomposition requires odd l and m")
    degrees: list[int] = []
    for d in _divisors(params.ell):
        o1 = _multiplicative_order(2, d)
        n1 = _totient(d) // o1
        for d2 in _divisors(params.m):
            o2 = _multiplicative_order(2, d2)
            n2 = _totient(d2) // o2
            count = math.gcd(o1, o2) * n1 * n2
            degrees.extend([math.lcm(o1, o2)] * count)
    degrees.sort()
    assert sum(degrees) == params.dim
    return degrees
