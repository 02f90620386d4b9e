"""Exact decision procedures on families of Hamming balls.

All searches run over coordinates where the centres disagree and only try
symbols that some centre uses there; coordinates where every centre agrees
are settled in closed form. Two prunes keep the trees small: every residual
radius must stay non-negative, and for any two centres ``i, j`` the number of
undecided coordinates where they differ cannot exceed ``r_i + r_j`` (each
such coordinate costs at least one of them).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Optional, Sequence, Tuple

import numpy as np

from . import _kernels as K
from .budgets import check as check_budget
from .core import Alphabet, BallFamily, Point, distance
from .errors import EmptyFamilyError, InvariantError, LengthMismatchError

log = logging.getLogger(__name__)

_FREE = -1


def _prepare(centers) -> list:
    centers = [tuple(int(x) for x in c) for c in centers]
    if not centers:
        raise EmptyFamilyError("need at least one centre")
    n = len(centers[0])
    for c in centers:
        if len(c) != n:
            raise LengthMismatchError(f"centres of lengths {n} and {len(c)}")
    return centers


def _suffix_pair_diff(C, order):
    """``out[p, i, j]`` = #coordinates in ``order[p:]`` where centres i and j differ."""
    m = C.shape[0]
    out = np.zeros((len(order) + 1, m, m), dtype=np.int64)
    for p in range(len(order) - 1, -1, -1):
        col = C[:, order[p]]
        out[p] = out[p + 1] + (col[:, None] != col[None, :])
    return out


def _split_columns(C):
    n = C.shape[1]
    if C.shape[0] == 1:
        return list(range(n)), []
    same = (C == C[0]).all(axis=0)
    agree = [k for k in range(n) if same[k]]
    dis = [k for k in range(n) if not same[k]]
    return agree, dis


# ---------------------------------------------------------------------------
# free dimension

@dataclass(frozen=True)
class FreeCertificate:
    """Largest ``|K|`` such that one point stays within ``t - |K|`` of every
    centre outside ``K``. ``value is None`` encodes minus infinity (the balls
    have no common point)."""

    centers: Tuple[Point, ...]
    t: int
    value: Optional[int]
    K: Optional[Tuple[int, ...]]
    witness: Optional[Point]

    @property
    def neg_infinity(self) -> bool:
        return self.value is None

    def verify(self) -> bool:
        if self.value is None:
            return self.K is None and self.witness is None
        Kset = set(self.K)
        if len(Kset) != self.value or self.value > self.t:
            return False
        for a in self.centers:
            off = sum(1 for k, (x, y) in enumerate(zip(self.witness, a)) if k not in Kset and x != y)
            if off + len(Kset) > self.t:
                return False
        return True

    def as_dict(self):
        return {
            "value": "-inf" if self.value is None else self.value,
            "K": None if self.K is None else [k + 1 for k in self.K],
            "witness": None if self.witness is None else list(self.witness),
            "t": self.t,
            "m": len(self.centers),
        }


def free_dimension(centers: Sequence[Sequence[int]], t: int) -> FreeCertificate:
    """Exact free dimension with a self-verifying certificate.

    Each disagreeing coordinate is either freed (costs every centre one unit
    of radius) or set to a symbol some centre uses there. Freeing a
    coordinate where all centres agree also costs everyone one unit, so those
    are added at the end, as many as the smallest residual radius allows.
    """
    centers = _prepare(centers)
    C = np.asarray(centers, dtype=np.int64)
    m, n = C.shape
    agree, dis = _split_columns(C)
    diff = _suffix_pair_diff(C, dis)
    L = len(dis)
    cap = min(t, n)
    best = {"value": -1, "choice": None}
    choice = [0] * L
    syms = [sorted(set(C[:, k].tolist())) for k in dis]

    def rec(p, r, frees):
        if best["value"] == cap:
            return
        rmin = int(r.min())
        if frees + min(rmin, (L - p) + len(agree)) <= best["value"]:
            return
        if p == L:
            val = frees + min(rmin, len(agree))
            if val > best["value"]:
                best["value"] = val
                best["choice"] = list(choice)
            return
        if m > 1 and (diff[p] > r[:, None] + r[None, :]).any():
            return
        col = C[:, dis[p]]
        if rmin >= 1:
            choice[p] = _FREE
            rec(p + 1, r - 1, frees + 1)
        for s in syms[p]:
            r2 = r - (col != s)
            if r2.min() >= 0:
                choice[p] = s
                rec(p + 1, r2, frees)

    rec(0, np.full(m, t, dtype=np.int64), 0)
    if best["value"] < 0:
        return FreeCertificate(tuple(centers), t, None, None, None)
    w = list(centers[0])
    Kset = []
    frees = 0
    for p, k in enumerate(dis):
        s = best["choice"][p]
        if s == _FREE:
            Kset.append(k)
            frees += 1
        else:
            w[k] = s
    Kset.extend(agree[: best["value"] - frees])
    cert = FreeCertificate(tuple(centers), t, best["value"], tuple(sorted(Kset)), tuple(w))
    if not cert.verify():
        raise InvariantError("free-dimension certificate failed its own check")
    return cert


def free_value(centers, t) -> Optional[int]:
    return free_dimension(centers, t).value


# ---------------------------------------------------------------------------
# candidate sets and common points

def _candidate_dfs(centers, t, first_only=False):
    C = np.asarray(centers, dtype=np.int64)
    m, n = C.shape
    _, dis = _split_columns(C)
    diff = _suffix_pair_diff(C, dis)
    syms = [sorted(set(C[:, k].tolist())) for k in dis]
    L = len(dis)
    w = list(centers[0])
    found = []

    def rec(p, r):
        if p == L:
            found.append(tuple(w))
            return first_only
        if m > 1 and (diff[p] > r[:, None] + r[None, :]).any():
            return False
        k = dis[p]
        col = C[:, k]
        for s in syms[p]:
            r2 = r - (col != s)
            if r2.min() >= 0:
                w[k] = s
                if rec(p + 1, r2):
                    return True
        return False

    rec(0, np.full(m, t, dtype=np.int64))
    return found


@dataclass(frozen=True)
class CandidateSet:
    """Common points of the balls whose every coordinate is copied from a centre."""

    centers: Tuple[Point, ...]
    t: int
    points: Tuple[Point, ...]

    def size_bound(self) -> Fraction:
        """sum_{s<=t} (m t)^s / s!, which is at most (e m)^t."""
        mt = len(self.centers) * self.t
        return sum((Fraction(mt**s, factorial(s)) for s in range(self.t + 1)), Fraction(0))

    def check(self) -> bool:
        if len(self.points) > self.size_bound():
            return False
        cols = [set(col) for col in zip(*self.centers)]
        for w in self.points:
            if any(distance(w, a) > self.t for a in self.centers):
                return False
            if any(x not in cols[k] for k, x in enumerate(w)):
                return False
        return len(set(self.points)) == len(self.points)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


def candidate_set(centers: Sequence[Sequence[int]], t: int) -> CandidateSet:
    centers = _prepare(centers)
    return CandidateSet(tuple(centers), t, tuple(_candidate_dfs(centers, t)))


def common_point(centers: Sequence[Sequence[int]], t: int) -> Optional[Point]:
    """Some point in every ball (the first candidate in lexicographic order), or None."""
    centers = _prepare(centers)
    found = _candidate_dfs(list(dict.fromkeys(centers)), t, first_only=True)
    return found[0] if found else None


def balls_intersect(family: BallFamily) -> Optional[Point]:
    """A common point of all balls (the free-dimension witness) or None."""
    if family.m == 0:
        raise EmptyFamilyError("empty family")
    return free_dimension(family.centers, family.t).witness


# ---------------------------------------------------------------------------
# escaping points: inside every given ball, outside one more

def escape_point(inside, outside: Point, t: int, alphabet: Alphabet) -> Optional[Point]:
    """A point within ``t`` of every centre in ``inside`` and farther than ``t``
    from ``outside``, or None when no such point exists.

    A symbol used by no inside centre costs every inside centre one unit, so
    it is only worth trying where all inside centres carry ``outside``'s
    symbol; elsewhere some centre's symbol dominates it.
    """
    n = len(outside)
    inside = list(dict.fromkeys(tuple(c) for c in inside))
    if not inside:
        if n <= t:
            return None
        w = []
        for x in outside:
            f = alphabet.fresh_symbol({x})
            if f is None:
                return None
            w.append(f)
        return tuple(w)
    C = np.asarray(inside, dtype=np.int64)
    m = C.shape[0]
    o = np.asarray(outside, dtype=np.int64)
    order = list(range(n))
    diff = _suffix_pair_diff(C, order)
    off = (C != o[None, :]).astype(np.int64)
    rem_off = np.zeros((n + 1, m), dtype=np.int64)
    for p in range(n - 1, -1, -1):
        rem_off[p] = rem_off[p + 1] + off[:, p]
    choices = []
    for k in order:
        col = sorted(set(C[:, k].tolist()))
        if col == [outside[k]]:
            f = alphabet.fresh_symbol({outside[k]})
            opts = ([f] if f is not None else []) + col
        else:
            opts = [s for s in col if s != outside[k]] + [s for s in col if s == outside[k]]
        choices.append(opts)
    w = [0] * n

    def rec(p, r, gain):
        if gain > t and p == n:
            return True
        if p == n:
            return False
        if gain + int((rem_off[p] + r).min()) <= t or gain + (n - p) <= t:
            return False
        if m > 1 and (diff[p] > r[:, None] + r[None, :]).any():
            return False
        col = C[:, p]
        for s in choices[p]:
            r2 = r - (col != s)
            if r2.min() >= 0:
                w[p] = s
                if rec(p + 1, r2, gain + (s != outside[p])):
                    return True
        return False

    if rec(0, np.full(m, t, dtype=np.int64), 0):
        return tuple(w)
    return None


# ---------------------------------------------------------------------------
# irredundant core

@dataclass(frozen=True)
class HellyCore:
    indices: Tuple[int, ...]          # 0-based, ascending
    m: int
    t: int
    whole_space: bool = False

    @property
    def bound(self) -> int:
        return 2 ** (self.t + 1)

    def as_dict(self):
        return {
            "core": [i + 1 for i in self.indices],
            "size": len(self.indices),
            "bound": self.bound,
            "m": self.m,
            "whole_space": self.whole_space,
        }


def same_intersection(family: BallFamily, indices) -> bool:
    """True iff the balls in ``indices`` cut out the same set as the whole family."""
    kept = [family.centers[i] for i in indices]
    for j in range(family.m):
        if j in indices:
            continue
        if escape_point(kept, family.centers[j], family.t, family.alphabet) is not None:
            return False
    return True


def irredundant_core(family: BallFamily) -> HellyCore:
    """Subfamily with the same intersection, from which no ball can be dropped.

    Balls are offered for deletion from the highest index down, so among
    redundant duplicates the lowest index survives. A ball ``j`` is dropped
    iff no point of the remaining balls escapes ``B_j``.
    """
    if family.m == 0:
        raise EmptyFamilyError("empty family")
    if family.whole_space:
        log.debug("t >= n: every ball is the whole space")
        return HellyCore((0,), family.m, family.t, whole_space=True)
    keep = list(range(family.m))
    for j in range(family.m - 1, -1, -1):
        others = [family.centers[i] for i in keep if i != j]
        if escape_point(others, family.centers[j], family.t, family.alphabet) is None:
            keep.remove(j)
    core = HellyCore(tuple(keep), family.m, family.t)
    if not same_intersection(family, keep):
        raise InvariantError("core does not reproduce the family's intersection")
    if len(keep) > core.bound:
        raise InvariantError(f"core of size {len(keep)} exceeds 2^(t+1) = {core.bound}")
    return core


# ---------------------------------------------------------------------------
# hulls and Radon partitions

def hull_violation(points, x: Point, t: int, alphabet: Alphabet, budget=None) -> Optional[Point]:
    """A point ``q`` within ``t`` of every point but farther than ``t`` from ``x``.

    Exhaustive scan of ``X^n``; ``x`` is in the hull iff this returns None.
    """
    points = _prepare(points)
    n = len(x)
    if len(points[0]) != n:
        raise LengthMismatchError("hull query of a different length")
    q = alphabet.require_finite("hull membership")
    check_budget("enumeration", q**n, budget)
    inside = np.asarray(points, dtype=np.int64)
    idx = K.first_point(q, n, inside, t, np.asarray(x, dtype=np.int64), True, 0, q**n)
    if idx < 0:
        return None
    digits = []
    for _ in range(n):
        digits.append(idx % q)
        idx //= q
    return tuple(reversed(digits))


def hull_membership(points, x: Point, t: int, alphabet: Alphabet, budget=None) -> bool:
    return hull_violation(points, x, t, alphabet, budget) is None


@dataclass(frozen=True)
class RadonPartition:
    part: Tuple[int, ...]          # the irredundant core, 0-based
    rest: Tuple[int, ...]
    witness: int                   # a point of ``rest`` shown to lie in hull(part)
    verified: bool

    def as_dict(self):
        return {
            "part": [i + 1 for i in self.part],
            "rest": [i + 1 for i in self.rest],
            "witness": self.witness + 1,
            "witness_in_hull_of_part": self.verified,
        }


def radon_partition(points, t: int, alphabet: Alphabet, budget=None) -> RadonPartition:
    """Split ``m >= 2^(t+1)+1`` points into two parts with intersecting hulls.

    The part is the irredundant core of the radius-``t`` balls around the
    points: both parts then span the same hull, so any point outside the core
    lies in the core's hull, which is confirmed by exhaustive scan.
    """
    points = _prepare(points)
    if len(points) < 2 ** (t + 1) + 1:
        raise ValueError(f"need at least 2^(t+1)+1 = {2 ** (t + 1) + 1} points, got {len(points)}")
    fam = BallFamily(alphabet, len(points[0]), t, tuple(points))
    core = irredundant_core(fam)
    rest = tuple(i for i in range(len(points)) if i not in core.indices)
    if not rest or not core.indices:
        raise InvariantError("degenerate Radon partition")
    j = rest[0]
    ok = hull_membership([points[i] for i in core.indices], points[j], t, alphabet, budget)
    return RadonPartition(core.indices, rest, j, ok)
