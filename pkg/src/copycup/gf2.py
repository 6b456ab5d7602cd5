"""Dense bit-packed linear algebra over GF(2).

Matrices are immutable after construction.  Row-reduction results are cached
per matrix so repeated row-space membership queries are cheap.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from . import _accel


def _pack_rows(dense: np.ndarray) -> np.ndarray:
    rows, cols = dense.shape
    nw = max(1, (cols + 63) >> 6)
    words = np.zeros((rows, nw), dtype=np.uint64)
    for i in range(rows):
        words[i] = _accel._pack_np(dense[i]) if cols else 0
    return words


class BitMatrix:
    """Immutable dense GF(2) matrix, bit-packed row-major."""

    __slots__ = ("rows", "cols", "_words", "_ech_cache")

    def __init__(self, rows: int, cols: int, words: np.ndarray):
        self.rows = rows
        self.cols = cols
        self._words = words
        self._ech_cache: tuple[np.ndarray, np.ndarray, int] | None = None

    # -- construction -------------------------------------------------------

    @classmethod
    def from_dense(cls, dense: Iterable[Sequence[int]] | np.ndarray) -> "BitMatrix":
        arr = np.asarray(dense, dtype=np.uint8)
        if arr.ndim != 2:
            raise ValueError("expected a 2-D array of bits")
        return cls(arr.shape[0], arr.shape[1], _pack_rows(arr))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        nw = max(1, (cols + 63) >> 6)
        return cls(rows, cols, np.zeros((rows, nw), dtype=np.uint64))

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls.from_dense(np.eye(n, dtype=np.uint8))

    # -- views ---------------------------------------------------------------

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.rows, self.cols), dtype=np.uint8)
        for i in range(self.rows):
            out[i] = _accel._unpack_np(self._words[i], self.cols)
        return out

    def row(self, i: int) -> np.ndarray:
        return _accel._unpack_np(self._words[i], self.cols)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and bool(np.array_equal(self._words, other._words))
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._words.tobytes()))

    def __str__(self) -> str:
        return "\n".join("".join(str(b) for b in row) for row in self.to_dense())

    def __repr__(self) -> str:
        return f"BitMatrix({self.rows}x{self.cols})"

    # -- algebra -------------------------------------------------------------

    def transpose(self) -> "BitMatrix":
        return BitMatrix.from_dense(self.to_dense().T)

    def matmul(self, other: "BitMatrix") -> "BitMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in GF(2) matmul")
        prod = (self.to_dense().astype(np.int64) @ other.to_dense().astype(np.int64)) & 1
        return BitMatrix.from_dense(prod.astype(np.uint8))

    def matvec(self, v: np.ndarray) -> np.ndarray:
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        return ((self.to_dense().astype(np.int64) @ np.asarray(v, dtype=np.int64)) & 1).astype(
            np.uint8
        )

    def is_zero(self) -> bool:
        return not self._words.any()

    # -- echelon cache -------------------------------------------------------

    def _echelon(self) -> tuple[np.ndarray, np.ndarray, int]:
        if self._ech_cache is None:
            work = self._words.copy()
            r, pivots = _accel.echelon(work, self.cols)
            self._ech_cache = (work, pivots, r)
        return self._ech_cache


def rank(m: BitMatrix) -> int:
    """GF(2) rank."""
    return m._echelon()[2]


def kernel_basis(m: BitMatrix) -> BitMatrix:
    """Basis of the right kernel {v : M v = 0}, one vector per row."""
    dense_t = m.to_dense().T  # cols x rows
    aug = np.concatenate([dense_t, np.eye(m.cols, dtype=np.uint8)], axis=1)
    packed = _pack_rows(aug)
    _accel.echelon(packed, m.rows + m.cols, limit=m.rows)
    basis_rows = []
    for i in range(m.cols):
        row = _accel._unpack_np(packed[i], m.rows + m.cols)
        if not row[: m.rows].any():
            basis_rows.append(row[m.rows :])
    if not basis_rows:
        return BitMatrix.zeros(0, m.cols)
    return BitMatrix.from_dense(np.array(basis_rows, dtype=np.uint8))


def in_rowspace(m: BitMatrix, v: np.ndarray) -> bool:
    """True iff v is a GF(2) linear combination of the rows of m."""
    v = np.asarray(v, dtype=np.uint8)
    if v.shape != (m.cols,):
        raise ValueError("vector length must equal column count")
    ech, pivots, r = m._echelon()
    vec = _accel._pack_np(v)
    _accel.reduce_vector(ech, pivots, r, vec)
    return not vec.any()


def hstack(mats: Sequence[BitMatrix]) -> BitMatrix:
    return BitMatrix.from_dense(np.concatenate([m.to_dense() for m in mats], axis=1))


def vstack(mats: Sequence[BitMatrix]) -> BitMatrix:
    return BitMatrix.from_dense(np.concatenate([m.to_dense() for m in mats], axis=0))
