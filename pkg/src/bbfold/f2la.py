"""Bit-packed dense linear algebra over GF(2).

Matrices are stored row-major with each row packed into 64-bit words
(little-endian bit order within a word).  All public objects are treated
as immutable after construction, so they can be shared freely.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

WORD = 64
_U64 = np.uint64


def _n_words(cols: int) -> int:
    return max(1, (cols + WORD - 1) // WORD)


def _pack_bits(dense: np.ndarray) -> np.ndarray:
    """Pack a 2D 0/1 array into uint64 words, little-endian bits."""
    dense = np.asarray(dense, dtype=np.uint8) & 1
    rows, cols = dense.shape
    padded = np.zeros((rows, _n_words(cols) * WORD), dtype=np.uint8)
    padded[:, :cols] = dense
    return np.packbits(padded, axis=1, bitorder="little").view(_U64)


def _unpack_bits(words: np.ndarray, cols: int) -> np.ndarray:
    bits = np.unpackbits(words.view(np.uint8), axis=1, bitorder="little")
    return bits[:, :cols].astype(np.uint8)


class BitVec:
    """Immutable GF(2) vector packed into uint64 words."""

    __slots__ = ("len", "words")

    def __init__(self, length: int, words: Optional[np.ndarray] = None):
        self.len = length
        if words is None:
            words = np.zeros(_n_words(length), dtype=_U64)
        self.words = words
        self.words.flags.writeable = False

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "BitVec":
        dense = np.asarray(bits, dtype=np.uint8).reshape(1, -1)
        return cls(dense.shape[1], _pack_bits(dense)[0])

    @classmethod
    def from_support(cls, length: int, support: Iterable[int]) -> "BitVec":
        bits = np.zeros(length, dtype=np.uint8)
        for i in support:
            bits[i] ^= 1
        return cls.from_bits(bits) if length else cls(0)

    def to_bits(self) -> np.ndarray:
        return _unpack_bits(self.words.reshape(1, -1), self.len)[0]

    def get(self, i: int) -> int:
        w, b = divmod(i, WORD)
        return int((self.words[w] >> _U64(b)) & _U64(1))

    def support(self) -> list[int]:
        return [int(i) for i in np.nonzero(self.to_bits())[0]]

    def weight(self) -> int:
        return int(np.bitwise_count(self.words).sum())

    def is_zero(self) -> bool:
        return not self.words.any()

    def __xor__(self, other: "BitVec") -> "BitVec":
        return BitVec(self.len, self.words ^ other.words)

    def dot(self, other: "BitVec") -> int:
        """Parity of the overlap of two vectors."""
        return int(np.bitwise_count(self.words & other.words).sum()) & 1

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BitVec)
            and self.len == other.len
            and bool(np.array_equal(self.words, other.words))
        )

    def __hash__(self) -> int:
        return hash((self.len, self.words.tobytes()))

    def __repr__(self) -> str:
        return f"BitVec({''.join(str(b) for b in self.to_bits())})"


class BitMatrix:
    """Immutable dense GF(2) matrix with bit-packed rows."""

    __slots__ = ("rows", "cols", "words")

    def __init__(self, rows: int, cols: int, words: Optional[np.ndarray] = None):
        self.rows = rows
        self.cols = cols
        if words is None:
            words = np.zeros((rows, _n_words(cols)), dtype=_U64)
        self.words = words
        self.words.flags.writeable = False

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls.from_dense(np.eye(n, dtype=np.uint8))

    @classmethod
    def from_dense(cls, dense) -> "BitMatrix":
        dense = np.atleast_2d(np.asarray(dense, dtype=np.uint8))
        if dense.size == 0:
            return cls(dense.shape[0], dense.shape[1] if dense.ndim == 2 else 0)
        return cls(dense.shape[0], dense.shape[1], _pack_bits(dense))

    @classmethod
    def from_rows(cls, rows: Sequence[BitVec], cols: Optional[int] = None) -> "BitMatrix":
        if not rows:
            return cls(0, cols or 0)
        cols = rows[0].len if cols is None else cols
        words = np.stack([r.words for r in rows])
        return cls(len(rows), cols, words)

    def to_dense(self) -> np.ndarray:
        if self.rows == 0:
            return np.zeros((0, self.cols), dtype=np.uint8)
        return _unpack_bits(self.words, self.cols)

    def row(self, i: int) -> BitVec:
        return BitVec(self.cols, self.words[i].copy())

    def get(self, i: int, j: int) -> int:
        w, b = divmod(j, WORD)
        return int((self.words[i, w] >> _U64(b)) & _U64(1))

    def transpose(self) -> "BitMatrix":
        return BitMatrix.from_dense(self.to_dense().T)

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.cols} vs {other.rows}")
        if self.rows == 0 or other.cols == 0:
            return BitMatrix(self.rows, other.cols)
        out = np.zeros((self.rows, other.words.shape[1]), dtype=_U64)
        dense = self.to_dense()
        for i in range(self.rows):
            sel = np.nonzero(dense[i])[0]
            if sel.size:
                out[i] = np.bitwise_xor.reduce(other.words[sel], axis=0)
        return BitMatrix(self.rows, other.cols, out)

    def mul_vec(self, v: BitVec) -> BitVec:
        """Matrix-vector product m @ v over GF(2)."""
        if self.cols != v.len:
            raise ValueError(f"shape mismatch: {self.cols} vs {v.len}")
        prod = np.bitwise_count(self.words & v.words).sum(axis=1) & 1
        return BitVec.from_bits(prod.astype(np.uint8)) if self.rows else BitVec(0)

    def stack(self, other: "BitMatrix") -> "BitMatrix":
        if self.cols != other.cols:
            raise ValueError("column mismatch in stack")
        return BitMatrix(self.rows + other.rows, self.cols,
                         np.vstack([self.words, other.words]))

    def augment(self, other: "BitMatrix") -> "BitMatrix":
        if self.rows != other.rows:
            raise ValueError("row mismatch in augment")
        return BitMatrix.from_dense(np.hstack([self.to_dense(), other.to_dense()]))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BitMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and bool(np.array_equal(self.words, other.words))
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.words.tobytes()))

    def __repr__(self) -> str:
        body = "\n".join("".join(str(b) for b in row) for row in self.to_dense())
        return f"BitMatrix({self.rows}x{self.cols})\n{body}"


def _rref_words(words: np.ndarray, cols: int) -> tuple[np.ndarray, list[int]]:
    """In-place style RREF on a writable copy of packed rows."""
    work = words.copy()
    nrows = work.shape[0]
    pivots: list[int] = []
    r = 0
    for j in range(cols):
        if r == nrows:
            break
        w, b = divmod(j, WORD)
        col = (work[r:, w] >> _U64(b)) & _U64(1)
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            work[[r, p]] = work[[p, r]]
        full_col = (work[:, w] >> _U64(b)) & _U64(1)
        full_col[r] = 0
        sel = np.nonzero(full_col)[0]
        if sel.size:
            work[sel] ^= work[r]
        pivots.append(j)
        r += 1
    return work[: len(pivots)], pivots


def rref(m: BitMatrix) -> tuple[BitMatrix, list[int]]:
    """Reduced row-echelon form with zero rows dropped, plus pivot columns."""
    if m.rows == 0:
        return m, []
    work, pivots = _rref_words(m.words, m.cols)
    return BitMatrix(len(pivots), m.cols, work), pivots


def rank(m: BitMatrix) -> int:
    return rref(m)[1].__len__()


def kernel_basis(m: BitMatrix) -> "Subspace":
    """Basis of the right kernel {v : m @ v = 0}."""
    red, pivots = rref(m)
    free = [j for j in range(m.cols) if j not in set(pivots)]
    dense_red = red.to_dense()
    basis = np.zeros((len(free), m.cols), dtype=np.uint8)
    for idx, f in enumerate(free):
        basis[idx, f] = 1
        for i, p in enumerate(pivots):
            if dense_red[i, f]:
                basis[idx, p] = 1
    return Subspace.from_matrix(m.cols, BitMatrix.from_dense(basis))


def solve(m: BitMatrix, rhs: BitVec) -> Optional[BitVec]:
    """Some x with m @ x = rhs, or None if the system is inconsistent."""
    if rhs.len != m.rows:
        raise ValueError(f"rhs length {rhs.len} != rows {m.rows}")
    aug = m.augment(BitMatrix.from_dense(rhs.to_bits().reshape(-1, 1)))
    red, pivots = rref(aug)
    x = np.zeros(m.cols, dtype=np.uint8)
    dense = red.to_dense()
    for i, p in enumerate(pivots):
        if p == m.cols:
            return None
        x[p] = dense[i, m.cols]
    return BitVec.from_bits(x) if m.cols else BitVec(0)


@dataclass(frozen=True)
class Subspace:
    """Subspace of GF(2)^ambient_dim with a canonical RREF basis."""

    ambient_dim: int
    basis: BitMatrix
    pivots: tuple[int, ...]

    @classmethod
    def from_matrix(cls, ambient_dim: int, rows: BitMatrix) -> "Subspace":
        red, pivots = rref(rows)
        return cls(ambient_dim, red, tuple(pivots))

    @classmethod
    def from_vectors(cls, ambient_dim: int, vecs: Sequence[BitVec]) -> "Subspace":
        if not vecs:
            return cls.zero(ambient_dim)
        return cls.from_matrix(ambient_dim, BitMatrix.from_rows(vecs, ambient_dim))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, BitMatrix(0, ambient_dim), ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls.from_matrix(ambient_dim, BitMatrix.identity(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def reduce(self, v: BitVec) -> BitVec:
        """Canonical coset representative of v modulo this subspace."""
        words = v.words.copy()
        for i, p in enumerate(self.pivots):
            w, b = divmod(p, WORD)
            if (words[w] >> _U64(b)) & _U64(1):
                words ^= self.basis.words[i]
        return BitVec(v.len, words)

    def contains(self, v: BitVec) -> bool:
        return self.reduce(v).is_zero()

    def coordinates(self, v: BitVec) -> np.ndarray:
        """Coefficients of v in the RREF basis; raises if v is outside."""
        coords = np.zeros(self.dim, dtype=np.uint8)
        words = v.words.copy()
        for i, p in enumerate(self.pivots):
            w, b = divmod(p, WORD)
            if (words[w] >> _U64(b)) & _U64(1):
                coords[i] = 1
                words ^= self.basis.words[i]
        if words.any():
            raise ValueError("vector not in subspace")
        return coords

    def vector_from_coordinates(self, coords: Sequence[int]) -> BitVec:
        words = np.zeros_like(self.basis.words[0]) if self.dim else np.zeros(
            _n_words(self.ambient_dim), dtype=_U64)
        for i, c in enumerate(coords):
            if c & 1:
                words = words ^ self.basis.words[i]
        return BitVec(self.ambient_dim, words)

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        return Subspace.from_matrix(self.ambient_dim, self.basis.stack(other.basis))

    def intersection(self, other: "Subspace") -> "Subspace":
        """Kernel-of-stacked-bases construction of the intersection."""
        self._check_ambient(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient_dim)
        stacked = self.basis.stack(other.basis)
        ker = kernel_basis(stacked.transpose())
        vecs = []
        for i in range(ker.dim):
            lam = ker.basis.to_dense()[i, : self.dim]
            sel = np.nonzero(lam)[0]
            if sel.size:
                words = np.bitwise_xor.reduce(self.basis.words[sel], axis=0)
                vecs.append(BitVec(self.ambient_dim, words))
        return Subspace.from_vectors(self.ambient_dim, vecs)

    def contains_space(self, other: "Subspace") -> bool:
        self._check_ambient(other)
        return all(self.contains(other.basis.row(i)) for i in range(other.dim))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def _check_ambient(self, other: "Subspace") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise ValueError(
                f"ambient dimension mismatch: {self.ambient_dim} vs {other.ambient_dim}")


def image_basis(m: BitMatrix, space: Subspace) -> Subspace:
    """Image {m @ v : v in space} as a subspace of GF(2)^rows."""
    vecs = [m.mul_vec(space.basis.row(i)) for i in range(space.dim)]
    return Subspace.from_vectors(m.rows, vecs)


def preimage_basis(m: BitMatrix, space: Subspace) -> Subspace:
    """Preimage {v : m @ v in space} as a subspace of GF(2)^cols.

    Realized as the kernel of (reduce-mod-space) o m, where reduction by an
    RREF basis is itself a linear map.
    """
    if space.ambient_dim != m.rows:
        raise ValueError("space must live in the codomain of m")
    reducer = np.eye(m.rows, dtype=np.uint8)
    dense_basis = space.basis.to_dense()
    for i, p in enumerate(space.pivots):
        reducer[p] ^= dense_basis[i]
    # rows of reducer express reduce(v) = v + sum(v_p * basis_row); as a matrix
    # acting on column vectors we need reduce(v)_j = v_j + sum_p v_p basis[p][j]
    red_m = BitMatrix.from_dense(reducer.T) @ m
    return kernel_basis(red_m)
