"""Brute-force ground truth for tiny instances.

Everything here scans the whole space ``X^n`` or searches families
exhaustively, in a fixed lexicographic order, so answers are reproducible
without seeds. These functions are what the fast paths are tested against.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from math import factorial
from typing import Optional, Tuple

import numpy as np

from . import _kernels as K
from .budgets import check as check_budget
from .core import BallFamily, PairFamily, Alphabet, Point
from .errors import EmptyFamilyError, InvariantError


def _all_points(q: int, n: int) -> np.ndarray:
    return np.array(list(product(range(q), repeat=n)), dtype=np.int64).reshape(q**n, n)


def exhaustive_intersection(family: BallFamily, limit=None) -> Optional[Point]:
    """First common point of the balls in lexicographic order, or None."""
    q = family.alphabet.require_finite("exhaustive intersection")
    n = family.n
    if family.m == 0:
        raise EmptyFamilyError("empty family")
    check_budget("oracle", q**n, limit)
    inside = np.asarray(family.centers, dtype=np.int64).reshape(family.m, n)
    idx = K.first_point(q, n, inside, family.t, np.zeros(n, dtype=np.int64), False, 0, q**n)
    if idx < 0:
        return None
    digits = []
    for _ in range(n):
        digits.append(idx % q)
        idx //= q
    return tuple(reversed(digits))


def _symmetry_group(q: int, n: int) -> np.ndarray:
    """Point permutations induced by coordinate permutations combined with
    independent symbol permutations on each coordinate; row ``g`` maps point
    index ``i`` to ``G[g, i]``."""
    pts = _all_points(q, n)
    weights = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    sym = list(permutations(range(q)))
    rows = []
    for perm in permutations(range(n)):
        moved = pts[:, list(perm)]
        for sigmas in product(sym, repeat=n):
            img = np.empty_like(moved)
            for k, s in enumerate(sigmas):
                img[:, k] = np.asarray(s, dtype=np.int64)[moved[:, k]]
            rows.append(img @ weights)
    return np.asarray(rows, dtype=np.int64)


def _canonical(G: np.ndarray, members) -> Tuple[int, ...]:
    imgs = np.sort(G[:, list(members)], axis=1)
    best = np.lexsort(imgs.T[::-1])[0]
    return tuple(int(x) for x in imgs[best])


@dataclass(frozen=True)
class HellyResult:
    n: int
    t: int
    q: int
    h: int
    witness: Tuple[Point, ...]      # centers of a largest critical family
    cap: int
    levels: Tuple[int, ...]         # intersecting orbits per family size

    @property
    def capped(self) -> bool:
        return self.h >= self.cap

    def as_dict(self):
        return {"n": self.n, "t": self.t, "q": self.q, "h": self.h, "expected": 2 ** (self.t + 1) if self.n > self.t else None,
                "cap": self.cap, "capped": self.capped, "witness": [list(c) for c in self.witness],
                "orbits_per_level": list(self.levels)}


def exhaustive_helly(n: int, t: int, q: int, limit=None, check=True) -> HellyResult:
    """Helly number of radius-``t`` balls in ``[q]^n``.

    This is the size of a largest critical family: one that does not
    intersect although every proper subfamily does. Intersecting families
    are grown one ball at a time, keeping one representative per symmetry
    orbit, and every one-ball extension is tested for criticality. The
    search stops at size ``2^(t+1) + 1``.
    """
    if q < 2 or n < 1 or t < 0:
        raise ValueError("need q >= 2, n >= 1, t >= 0")
    size = q**n
    check_budget("oracle", size * size, limit)
    group = factorial(n) * factorial(q) ** n
    check_budget("oracle", group * size, limit)
    pts = _all_points(q, n)
    D = K.cross_distances(pts, pts)
    masks = []
    for c in range(size):
        row = np.flatnonzero(D[c] <= t)
        masks.append(sum(1 << int(x) for x in row))
    cap = 2 ** (t + 1) + 1
    if len(set(masks)) == 1:
        # every ball is the whole space
        h, witness, levels = 1, ((tuple(int(x) for x in pts[0]),)), (1,)
    else:
        G = _symmetry_group(q, n)
        level = {(0,): masks[0]}
        h, witness_idx = 1, (0,)
        counts = [1]
        k = 1
        while level and k + 1 <= cap:
            nxt = {}
            for S, inter in sorted(level.items()):
                for c in range(size):
                    if c in S:
                        continue
                    if inter & masks[c]:
                        if k + 1 < cap:
                            key = _canonical(G, S + (c,))
                            if key not in nxt:
                                m = masks[key[0]]
                                for x in key[1:]:
                                    m &= masks[x]
                                nxt[key] = m
                        continue
                    if k + 1 <= h:
                        continue
                    critical = True
                    for drop in range(k):
                        m = masks[c]
                        for j, x in enumerate(S):
                            if j != drop:
                                m &= masks[x]
                        if not m:
                            critical = False
                            break
                    if critical:
                        h, witness_idx = k + 1, S + (c,)
            level = nxt
            k += 1
            if level:
                counts.append(len(level))
        witness = tuple(tuple(int(x) for x in pts[i]) for i in witness_idx)
        levels = tuple(counts)
    res = HellyResult(n, t, q, h, witness, cap, levels)
    if check and n > t and h != 2 ** (t + 1):
        raise InvariantError(f"Helly number {h} differs from 2^(t+1) = {2 ** (t + 1)} at n={n}, t={t}, q={q}")
    return res


@dataclass(frozen=True)
class MaxFResult:
    n: int
    t: int
    q: int
    mode: str
    m_cap: int
    m: int
    witness: Optional[PairFamily]

    def as_dict(self):
        return {
            "n": self.n, "t": self.t, "q": self.q, "mode": self.mode, "m_cap": self.m_cap, "m": self.m,
            "cap_reached": self.m >= self.m_cap,
            "pairs": [] if self.witness is None else [[list(a), list(b)] for a, b in self.witness.pairs],
            "note": "maximum at this fixed length n only; the extremal function maximizes over all n > t",
        }


def _max_clique(adj, cand: int, cap: int):
    best = []
    cur = []

    def rec(P):
        nonlocal best
        if len(cur) > len(best):
            best = list(cur)
        if len(best) >= cap or len(cur) + bin(P).count("1") <= len(best):
            return
        while P:
            if len(cur) + bin(P).count("1") <= len(best) or len(best) >= cap:
                return
            v = (P & -P).bit_length() - 1
            P &= P - 1
            cur.append(v)
            rec(P & adj[v])
            cur.pop()

    rec(cand)
    return best


def exhaustive_max_f(n: int, t: int, q: int, mode: str = "f", m_cap: int = 8, limit=None) -> MaxFResult:
    """Largest valid pair family of length ``n`` with at most ``m_cap`` pairs.

    By symmetry the first pair is ``(0^n, 1^d 0^(n-d))``; the rest is a
    maximum clique search over pairs compatible with it.
    """
    from .extremal import _mode
    mode = _mode(mode)
    if m_cap < 1:
        raise ValueError("m_cap must be >= 1")
    size = q**n
    check_budget("oracle", size * size, limit)
    pts = _all_points(q, n)
    D = K.cross_distances(pts, pts)
    ai, bi = np.nonzero(D >= t + 1)
    alphabet = Alphabet(q)
    best_m, best_pairs = 0, None
    zero = 0
    for d in range(t + 1, n + 1):
        b0 = sum(q ** (n - 1 - k) for k in range(d))
        if mode == "f":
            ok = (D[zero, bi] <= t) & (D[ai, b0] <= t)
        else:
            ok = D[zero, bi] + D[ai, b0] <= 2 * t
        ok &= ~((ai == zero) & (bi == b0))
        ca, cb = ai[ok], bi[ok]
        V = len(ca)
        if best_m == 0:
            best_m, best_pairs = 1, [(zero, b0)]
        if V == 0 or best_m >= m_cap:
            continue
        X = D[np.ix_(ca, cb)]
        if mode == "f":
            C = (X <= t) & (X.T <= t)
        else:
            C = X + X.T <= 2 * t
        np.fill_diagonal(C, False)
        adj = [sum(1 << int(j) for j in np.flatnonzero(C[v])) for v in range(V)]
        clique = _max_clique(adj, (1 << V) - 1, m_cap - 1)
        if 1 + len(clique) > best_m:
            best_m = 1 + len(clique)
            best_pairs = [(zero, b0)] + [(int(ca[v]), int(cb[v])) for v in clique]
        if best_m >= m_cap:
            break
    witness = None
    if best_pairs:
        witness = PairFamily(alphabet, n, t, tuple((tuple(int(x) for x in pts[a]), tuple(int(x) for x in pts[b]))
                                                   for a, b in best_pairs))
    return MaxFResult(n, t, q, mode, m_cap, best_m, witness)
