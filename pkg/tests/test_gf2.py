"""Bit-packed GF(2) linear algebra against dense numpy references."""

import itertools

import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from copycup.gf2 import BitMatrix, hstack, in_rowspace, kernel_basis, rank, vstack

matrices = st.integers(1, 40).flatmap(
    lambda r: st.integers(1, 70).flatmap(
        lambda c: st.binary(min_size=r * c, max_size=r * c).map(
            lambda raw: np.frombuffer(raw, dtype=np.uint8).reshape(r, c) & 1
        )
    )
)


def dense_rank(a: np.ndarray) -> int:
    a = a.copy() & 1
    r = 0
    for c in range(a.shape[1]):
        piv = next((i for i in range(r, a.shape[0]) if a[i, c]), None)
        if piv is None:
            continue
        a[[r, piv]] = a[[piv, r]]
        for i in range(a.shape[0]):
            if i != r and a[i, c]:
                a[i] ^= a[r]
        r += 1
    return r


def test_identity_rank():
    assert rank(BitMatrix.identity(3)) == 3


def test_all_ones_rank():
    assert rank(BitMatrix.from_dense(np.ones((2, 2), dtype=np.uint8))) == 1


def test_kernel_of_identity_empty():
    assert kernel_basis(BitMatrix.identity(4)).rows == 0


def test_kernel_of_parity_row():
    kb = kernel_basis(BitMatrix.from_dense([[1, 1]]))
    assert kb.rows == 1 and list(kb.row(0)) == [1, 1]


def test_in_rowspace_examples():
    m = BitMatrix.from_dense([[1, 1, 0]])
    assert in_rowspace(m, np.array([0, 0, 0], dtype=np.uint8))
    assert not in_rowspace(m, np.array([0, 1, 1], dtype=np.uint8))
    assert in_rowspace(BitMatrix.identity(3), np.array([1, 0, 1], dtype=np.uint8))


@given(matrices)
def test_pack_roundtrip(dense):
    m = BitMatrix.from_dense(dense)
    assert np.array_equal(m.to_dense(), dense)


@given(matrices)
def test_rank_matches_dense_and_transpose(dense):
    m = BitMatrix.from_dense(dense)
    r = rank(m)
    assert r == dense_rank(dense)
    assert r == rank(m.transpose())


@given(matrices)
def test_kernel_basis_properties(dense):
    m = BitMatrix.from_dense(dense)
    kb = kernel_basis(m)
    assert kb.rows + rank(m) == m.cols
    if kb.rows:
        prod = m.matmul(kb.transpose())
        assert prod.is_zero()
        assert rank(kb) == kb.rows


@given(matrices)
def test_matmul_matches_numpy(dense):
    m = BitMatrix.from_dense(dense)
    other = BitMatrix.from_dense(dense.T)
    expect = (dense @ dense.T) & 1
    assert np.array_equal(m.matmul(other).to_dense(), expect)


def test_in_rowspace_matches_exhaustive_span(rng):
    for _ in range(20):
        dense = rng.integers(0, 2, size=(4, 7), dtype=np.uint8)
        m = BitMatrix.from_dense(dense)
        span = set()
        for coeffs in itertools.product((0, 1), repeat=4):
            v = np.zeros(7, dtype=np.uint8)
            for c, row in zip(coeffs, dense):
                if c:
                    v ^= row
            span.add(v.tobytes())
        for _ in range(10):
            v = rng.integers(0, 2, size=7, dtype=np.uint8)
            assert in_rowspace(m, v) == (v.tobytes() in span)


def test_stacking(rng):
    a = rng.integers(0, 2, size=(3, 5), dtype=np.uint8)
    b = rng.integers(0, 2, size=(3, 4), dtype=np.uint8)
    c = rng.integers(0, 2, size=(2, 5), dtype=np.uint8)
    h = hstack([BitMatrix.from_dense(a), BitMatrix.from_dense(b)])
    v = vstack([BitMatrix.from_dense(a), BitMatrix.from_dense(c)])
    assert np.array_equal(h.to_dense(), np.hstack([a, b]))
    assert np.array_equal(v.to_dense(), np.vstack([a, c]))
