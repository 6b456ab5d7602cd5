"""Hot kernels with numba-compiled and pure-numpy implementations.

The compiled path is used by default; setting the environment variable
``COPYCUP_NO_NUMBA`` to any non-empty value selects the pure-numpy fallback.
Both implementations are kept behaviourally identical (same outputs for the
same inputs, up to RNG stream differences in the randomized distance probe).
"""

from __future__ import annotations

import os

import numpy as np

USING_NUMBA = not os.environ.get("COPYCUP_NO_NUMBA")

_POPCOUNT16 = np.array([bin(i).count("1") for i in range(1 << 16)], dtype=np.uint8)


# ---------------------------------------------------------------------------
# Pure-numpy implementations
# ---------------------------------------------------------------------------


def _echelon_np(data: np.ndarray, ncols: int, limit: int) -> tuple[int, np.ndarray]:
    """Row-reduce packed GF(2) matrix in place; pivot search in columns < limit.

    Returns (rank, pivots) where pivots[i] is the pivot column of row i.
    """
    nrows = data.shape[0]
    pivots = np.full(nrows, -1, dtype=np.int64)
    r = 0
    for c in range(limit):
        w = c >> 6
        b = np.uint64(c & 63)
        if r >= nrows:
            break
        col = (data[r:, w] >> b) & np.uint64(1)
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            data[[r, p]] = data[[p, r]]
        mask = ((data[:, w] >> b) & np.uint64(1)).astype(bool)
        mask[r] = False
        if mask.any():
            data[mask] ^= data[r]
        pivots[r] = c
        r += 1
    return r, pivots


def _reduce_vector_np(ech: np.ndarray, pivots: np.ndarray, rank: int, vec: np.ndarray) -> None:
    """Reduce packed vector in place against an echelonized packed matrix."""
    for i in range(rank):
        c = int(pivots[i])
        if (int(vec[c >> 6]) >> (c & 63)) & 1:
            vec ^= ech[i]


def _weight_np(vec: np.ndarray) -> int:
    return int(np.bitwise_count(vec).sum())


def _pack_np(bits: np.ndarray) -> np.ndarray:
    """Pack a uint8 0/1 vector into uint64 words (little-endian bit order)."""
    n = bits.shape[0]
    nw = (n + 63) >> 6
    padded = np.zeros(nw * 64, dtype=np.uint8)
    padded[:n] = bits
    return np.packbits(padded.reshape(nw, 8, 8)[:, :, ::-1].reshape(nw, 64), axis=1).view(
        np.uint64
    )[:, 0]


def _unpack_np(words: np.ndarray, n: int) -> np.ndarray:
    bits = np.unpackbits(words.view(np.uint8)).reshape(-1, 8)[:, ::-1].reshape(-1)
    return bits[:n].astype(np.uint8)


def _rand_upper_trials_np(
    dense: np.ndarray,
    n: int,
    hx_ech: np.ndarray,
    hx_pivots: np.ndarray,
    hx_rank: int,
    trials: int,
    seed: int,
    start_best: int,
) -> int:
    rng = np.random.RandomState(seed)
    m = dense.shape[0]
    best = start_best
    for _ in range(trials):
        perm = rng.permutation(n)
        permuted = np.ascontiguousarray(dense[:, perm])
        work = np.stack([_pack_np(permuted[i]) for i in range(m)])
        rank, _ = _echelon_np(work, n, n)
        rows = work[:rank]
        weights = np.bitwise_count(rows).sum(axis=1)
        candidates = []
        for i in range(rank):
            if 0 < weights[i] < best:
                candidates.append(rows[i])
        for i in range(rank):
            for j in range(i + 1, rank):
                v = rows[i] ^ rows[j]
                if 0 < _weight_np(v) < best:
                    candidates.append(v)
        for v in candidates:
            w = _weight_np(v)
            if w >= best:
                continue
            bits_p = _unpack_np(v, n)
            orig = np.zeros(n, dtype=np.uint8)
            orig[perm] = bits_p
            packed = _pack_np(orig)
            _reduce_vector_np(hx_ech, hx_pivots, hx_rank, packed)
            if packed.any():
                best = w
    return best


# ---------------------------------------------------------------------------
# Numba implementations
# ---------------------------------------------------------------------------

if USING_NUMBA:
    from numba import njit

    @njit(cache=True)
    def _echelon_nb(data, ncols, limit):  # pragma: no cover - exercised via wrapper
        nrows = data.shape[0]
        pivots = np.full(nrows, -1, np.int64)
        r = 0
        for c in range(limit):
            if r >= nrows:
                break
            w = c >> 6
            b = np.uint64(c & 63)
            piv = -1
            for i in range(r, nrows):
                if (data[i, w] >> b) & np.uint64(1):
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for col in range(data.shape[1]):
                    tmp = data[r, col]
                    data[r, col] = data[piv, col]
                    data[piv, col] = tmp
            for i in range(nrows):
                if i != r and ((data[i, w] >> b) & np.uint64(1)):
                    for col in range(data.shape[1]):
                        data[i, col] ^= data[r, col]
            pivots[r] = c
            r += 1
        return r, pivots

    @njit(cache=True)
    def _reduce_vector_nb(ech, pivots, rank, vec):  # pragma: no cover
        for i in range(rank):
            c = pivots[i]
            if (vec[c >> 6] >> np.uint64(c & 63)) & np.uint64(1):
                for col in range(vec.shape[0]):
                    vec[col] ^= ech[i, col]

    @njit(cache=True)
    def _weight_nb(vec, table):  # pragma: no cover
        total = 0
        for w in vec:
            x = w
            while x:
                total += table[x & np.uint64(0xFFFF)]
                x >>= np.uint64(16)
        return total

    @njit(cache=True)
    def _rand_upper_trials_nb(
        dense, n, hx_ech, hx_pivots, hx_rank, trials, seed, start_best, table
    ):  # pragma: no cover
        np.random.seed(seed)
        m = dense.shape[0]
        nw = (n + 63) >> 6
        best = start_best
        work = np.zeros((m, nw), np.uint64)
        cand = np.zeros(nw, np.uint64)
        orig = np.zeros(nw, np.uint64)
        for _ in range(trials):
            perm = np.random.permutation(n)
            work[:, :] = np.uint64(0)
            for i in range(m):
                for c in range(n):
                    if dense[i, perm[c]]:
                        work[i, c >> 6] |= np.uint64(1) << np.uint64(c & 63)
            rank, _ = _echelon_nb(work, n, n)
            for i in range(rank):
                for j in range(i, rank):
                    if i == j:
                        for col in range(nw):
                            cand[col] = work[i, col]
                    else:
                        for col in range(nw):
                            cand[col] = work[i, col] ^ work[j, col]
                    w = _weight_nb(cand, table)
                    if w == 0 or w >= best:
                        continue
                    for col in range(nw):
                        orig[col] = np.uint64(0)
                    for c in range(n):
                        if (cand[c >> 6] >> np.uint64(c & 63)) & np.uint64(1):
                            pc = perm[c]
                            orig[pc >> 6] |= np.uint64(1) << np.uint64(pc & 63)
                    _reduce_vector_nb(hx_ech, hx_pivots, hx_rank, orig)
                    nonzero = False
                    for col in range(nw):
                        if orig[col]:
                            nonzero = True
                            break
                    if nonzero:
                        best = w
        return best

# ---------------------------------------------------------------------------
# Dispatch wrappers
# ---------------------------------------------------------------------------


def echelon(data: np.ndarray, ncols: int, limit: int | None = None) -> tuple[int, np.ndarray]:
    """In-place reduced row echelon form of a packed GF(2) matrix."""
    if limit is None:
        limit = ncols
    if USING_NUMBA:
        return _echelon_nb(data, ncols, limit)
    return _echelon_np(data, ncols, limit)


def reduce_vector(ech: np.ndarray, pivots: np.ndarray, rank: int, vec: np.ndarray) -> None:
    """In-place reduction of a packed vector against an echelonized matrix."""
    if USING_NUMBA:
        _reduce_vector_nb(ech, pivots, rank, vec)
    else:
        _reduce_vector_np(ech, pivots, rank, vec)


def rand_upper_trials(
    dense: np.ndarray,
    n: int,
    hx_ech: np.ndarray,
    hx_pivots: np.ndarray,
    hx_rank: int,
    trials: int,
    seed: int,
    start_best: int,
) -> int:
    """Randomized low-weight logical-operator probe; returns best weight found."""
    if USING_NUMBA:
        return _rand_upper_trials_nb(
            dense, n, hx_ech, hx_pivots, hx_rank, trials, seed, start_best, _POPCOUNT16
        )
    return _rand_upper_trials_np(dense, n, hx_ech, hx_pivots, hx_rank, trials, seed, start_best)
