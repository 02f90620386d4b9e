"""numba-compiled versions of the hot loops (see ``numpy_impl`` for the contract)."""
import numpy as np
from numba import njit

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)
_ONE = np.uint64(1)
_TWO = np.uint64(2)
_FOUR = np.uint64(4)
_SHIFT = np.uint64(56)
_ZERO = np.uint64(0)


@njit(cache=True, inline="always")
def _popcount(x):
    x = x - ((x >> _ONE) & _M1)
    x = (x & _M2) + ((x >> _TWO) & _M2)
    x = (x + (x >> _FOUR)) & _M4
    return np.int64((x * _H01) >> _SHIFT)


@njit(cache=True)
def cross_distances(A, B):
    ma, n = A.shape
    mb = B.shape[0]
    out = np.empty((ma, mb), dtype=np.int64)
    for i in range(ma):
        for j in range(mb):
            d = 0
            for k in range(n):
                if A[i, k] != B[j, k]:
                    d += 1
            out[i, j] = d
    return out


@njit(cache=True)
def packed_cross_distances(PA, PB):
    ma, w = PA.shape
    mb = PB.shape[0]
    out = np.empty((ma, mb), dtype=np.int64)
    for i in range(ma):
        for j in range(mb):
            d = 0
            for k in range(w):
                d += _popcount(PA[i, k] ^ PB[j, k])
            out[i, j] = d
    return out


@njit(cache=True)
def packed_and_counts(PA, PB):
    ma, w = PA.shape
    mb = PB.shape[0]
    out = np.empty((ma, mb), dtype=np.int64)
    for i in range(ma):
        for j in range(mb):
            d = 0
            for k in range(w):
                d += _popcount(PA[i, k] & PB[j, k])
            out[i, j] = d
    return out


@njit(cache=True)
def packed_min_distance(P):
    m, w = P.shape
    best = np.iinfo(np.int64).max
    for i in range(m):
        for j in range(i + 1, m):
            d = 0
            for k in range(w):
                d += _popcount(P[i, k] ^ P[j, k])
            if d < best:
                best = d
    return best


@njit(cache=True)
def event_counts(n, a_bits, masks, lo, eq, top):
    m = a_bits.shape[0]
    counts = np.zeros(m, dtype=np.int64)
    overlaps = 0
    union = 0
    full = ~_ZERO
    if n < 64:
        full = (_ONE << np.uint64(n)) - _ONE
    total = np.int64(1) << np.int64(n)
    for s in range(total):
        alpha = np.uint64(s)
        hits = 0
        for i in range(m):
            x = alpha ^ a_bits[i]
            agree = _popcount((~x & full) & masks[i])
            inside = agree >= lo[i]
            if not inside and eq[i] >= 0 and agree == eq[i] and (x & top[i]) != _ZERO:
                inside = True
            if inside:
                counts[i] += 1
                hits += 1
        if hits > 1:
            overlaps += 1
        if hits > 0:
            union += 1
    return counts, overlaps, union


@njit(cache=True)
def first_point(q, n, inside, t, outside, has_outside, start, stop):
    digits = np.empty(n, dtype=np.int64)
    rem = start
    for k in range(n - 1, -1, -1):
        digits[k] = rem % q
        rem //= q
    k_in = inside.shape[0]
    for idx in range(start, stop):
        ok = True
        for c in range(k_in):
            d = 0
            for k in range(n):
                if digits[k] != inside[c, k]:
                    d += 1
                    if d > t:
                        break
            if d > t:
                ok = False
                break
        if ok and has_outside:
            d = 0
            for k in range(n):
                if digits[k] != outside[k]:
                    d += 1
            if d <= t:
                ok = False
        if ok:
            return idx
        # odometer increment, last coordinate fastest
        k = n - 1
        while k >= 0:
            digits[k] += 1
            if digits[k] < q:
                break
            digits[k] = 0
            k -= 1
    return -1


@njit(cache=True)
def nonzero_pattern(X, F):
    r, n = X.shape
    c = F.shape[0]
    out = np.empty((r, c), dtype=np.bool_)
    for i in range(r):
        for j in range(c):
            ok = True
            for k in range(n):
                f = F[j, k]
                if f >= 0 and X[i, k] == f:
                    ok = False
                    break
            out[i, j] = ok
    return out


@njit(cache=True)
def disjoint_counts(A, B):
    ma, n = A.shape
    mb = B.shape[0]
    out = np.empty((ma, mb), dtype=np.int64)
    for i in range(ma):
        for j in range(mb):
            d = 0
            for k in range(n):
                if (A[i, k] & B[j, k]) == 0:
                    d += 1
            out[i, j] = d
    return out
