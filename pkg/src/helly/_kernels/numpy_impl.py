"""Pure-numpy versions of the hot loops.

Same signatures and results as ``numba_impl``; used when numba is missing or
``HELLY_DISABLE_NUMBA`` is set. Large products are processed in row chunks so
peak memory stays bounded.
"""
import numpy as np

_CHUNK_CELLS = 1 << 22


def _row_chunk(cols, width):
    return max(1, _CHUNK_CELLS // max(1, cols * width))


def cross_distances(A, B):
    A = np.asarray(A)
    B = np.asarray(B)
    out = np.empty((A.shape[0], B.shape[0]), dtype=np.int64)
    step = _row_chunk(B.shape[0], A.shape[1])
    for lo in range(0, A.shape[0], step):
        blk = A[lo:lo + step]
        out[lo:lo + step] = (blk[:, None, :] != B[None, :, :]).sum(axis=2)
    return out


def packed_cross_distances(PA, PB):
    out = np.empty((PA.shape[0], PB.shape[0]), dtype=np.int64)
    step = _row_chunk(PB.shape[0], PA.shape[1])
    for lo in range(0, PA.shape[0], step):
        x = PA[lo:lo + step, None, :] ^ PB[None, :, :]
        out[lo:lo + step] = np.bitwise_count(x).sum(axis=2, dtype=np.int64)
    return out


def packed_and_counts(PA, PB):
    out = np.empty((PA.shape[0], PB.shape[0]), dtype=np.int64)
    step = _row_chunk(PB.shape[0], PA.shape[1])
    for lo in range(0, PA.shape[0], step):
        x = PA[lo:lo + step, None, :] & PB[None, :, :]
        out[lo:lo + step] = np.bitwise_count(x).sum(axis=2, dtype=np.int64)
    return out


def packed_min_distance(P):
    m = P.shape[0]
    best = np.iinfo(np.int64).max
    step = _row_chunk(m, P.shape[1])
    for lo in range(0, m, step):
        hi = min(m, lo + step)
        d = np.bitwise_count(P[lo:hi, None, :] ^ P[None, :, :]).sum(axis=2, dtype=np.int64)
        rows = np.arange(lo, hi)[:, None]
        cols = np.arange(m)[None, :]
        d = np.where(cols > rows, d, np.iinfo(np.int64).max)
        if d.size:
            best = min(best, int(d.min()))
    return best


def event_counts(n, a_bits, masks, lo, eq, top):
    m = a_bits.shape[0]
    counts = np.zeros(m, dtype=np.int64)
    overlaps = 0
    union = 0
    total = 1 << n
    step = max(1, min(total, _CHUNK_CELLS // max(1, m)))
    full = np.uint64((1 << n) - 1) if n < 64 else np.uint64(0xFFFFFFFFFFFFFFFF)
    for start in range(0, total, step):
        alpha = np.arange(start, min(total, start + step), dtype=np.uint64)
        x = alpha[:, None] ^ a_bits[None, :]
        agree = np.bitwise_count((~x & full) & masks[None, :]).astype(np.int64)
        hit = (agree >= lo[None, :]) | (
            (eq[None, :] >= 0) & (agree == eq[None, :]) & ((x & top[None, :]) != 0)
        )
        counts += hit.sum(axis=0)
        per = hit.sum(axis=1)
        overlaps += int((per > 1).sum())
        union += int((per > 0).sum())
    return counts, overlaps, union


def _digits(idx, q, n):
    out = np.empty((idx.shape[0], n), dtype=np.int64)
    rem = idx.copy()
    for k in range(n - 1, -1, -1):
        out[:, k] = rem % q
        rem //= q
    return out


def first_point(q, n, inside, t, outside, has_outside, start, stop):
    step = max(1, _CHUNK_CELLS // max(1, n * (inside.shape[0] + 1)))
    for lo in range(start, stop, step):
        idx = np.arange(lo, min(stop, lo + step), dtype=np.int64)
        pts = _digits(idx, q, n)
        ok = np.ones(idx.shape[0], dtype=bool)
        for c in inside:
            ok &= (pts != c[None, :]).sum(axis=1) <= t
        if has_outside:
            ok &= (pts != outside[None, :]).sum(axis=1) > t
        hits = np.flatnonzero(ok)
        if hits.size:
            return int(idx[hits[0]])
    return -1


def nonzero_pattern(X, F):
    out = np.empty((X.shape[0], F.shape[0]), dtype=np.bool_)
    free = F < 0
    step = _row_chunk(F.shape[0], X.shape[1])
    for lo in range(0, X.shape[0], step):
        blk = X[lo:lo + step]
        ok = free[None, :, :] | (blk[:, None, :] != F[None, :, :])
        out[lo:lo + step] = ok.all(axis=2)
    return out


def disjoint_counts(A, B):
    out = np.empty((A.shape[0], B.shape[0]), dtype=np.int64)
    step = _row_chunk(B.shape[0], A.shape[1])
    for lo in range(0, A.shape[0], step):
        blk = A[lo:lo + step]
        out[lo:lo + step] = ((blk[:, None, :] & B[None, :, :]) == 0).sum(axis=2)
    return out
