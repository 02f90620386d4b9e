"""Extremal pair families, their verifiers and proof certificates.

A pair family ``(a_i, b_i)`` is valid in mode ``"f"`` when every
``dist(a_i, b_i) >= t+1`` and every cross distance ``dist(a_i, b_j) <= t``;
mode ``"f-prime"`` relaxes the cross condition to
``dist(a_i, b_j) + dist(a_j, b_i) <= 2t``. Valid families satisfy
``sum_i V(t+s_i, s_i) / 2^(t+s_i) <= 1`` (always in mode f, over binary
alphabets in mode f-prime); the certificates below check the two
arguments behind that inequality on concrete families.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import ceil, comb
from typing import Dict, List, Optional, Tuple

import numpy as np

from . import _kernels as K
from .budgets import check as check_budget
from .codes import Code, verify_min_distance
from .core import BINARY, Alphabet, PairFamily, complement, pair_weight, volume
from .errors import AlphabetError, BudgetExceededError, EmptyFamilyError

MODES = ("f", "f-prime")
MAX_LISTED = 20


def _mode(mode: str) -> str:
    mode = {"fprime": "f-prime", "f'": "f-prime"}.get(mode, mode)
    if mode not in MODES:
        raise ValueError(f"mode must be 'f' or 'f-prime', got {mode!r}")
    return mode


# ---------------------------------------------------------------------------
# constructions

def prop21_family(t: int) -> PairFamily:
    """All ``2^(t+1)`` strings of length ``t+1``, each paired with its complement."""
    if t < 0:
        raise ValueError("t must be non-negative")
    check_budget("family", 2 ** (t + 1))
    pts = list(product((0, 1), repeat=t + 1))
    return PairFamily(BINARY, t + 1, t, tuple((a, complement(a)) for a in pts))


def even_weight_family(t: int) -> PairFamily:
    """Even-weight strings of length ``t+2`` paired with their complements (every ``s_i = 2``)."""
    if t < 0:
        raise ValueError("t must be non-negative")
    check_budget("family", 2 ** (t + 1))
    pts = [p for p in product((0, 1), repeat=t + 2) if sum(p) % 2 == 0]
    return PairFamily(BINARY, t + 2, t, tuple((a, complement(a)) for a in pts))


_SHIFT = {0: 1, 1: 2, 2: 0}


def ternary_family(t: int, alphabet: Optional[Alphabet] = None) -> PairFamily:
    """Ternary strings of length ``t+1`` with digit sum divisible by 3, each
    paired with its cyclic shift ``0->1->2->0``; ``3^t`` pairs, valid in mode f-prime."""
    alphabet = alphabet or Alphabet(3)
    if alphabet.size is not None and alphabet.size < 3:
        raise AlphabetError("the ternary family needs at least 3 symbols")
    if not 0 <= t <= 12:
        raise ValueError(f"ternary family supports 0 <= t <= 12, got {t}")
    check_budget("family", 3**t)
    pts = [p for p in product((0, 1, 2), repeat=t + 1) if sum(p) % 3 == 0]
    return PairFamily(alphabet, t + 1, t, tuple((a, tuple(_SHIFT[x] for x in a)) for a in pts))


def family_from_code(code: Code, t: int) -> PairFamily:
    """Codewords paired with their complements; valid in mode f-prime when
    the code's minimum distance is at least ``n - t``."""
    if not 0 <= t < code.n:
        raise ValueError(f"need 0 <= t < n = {code.n}")
    return PairFamily(BINARY, code.n, t, tuple((w, complement(w)) for w in code.codewords))


# ---------------------------------------------------------------------------
# verification

@dataclass(frozen=True)
class FamilyVerdict:
    mode: str
    holds: bool
    violations: Tuple[Tuple, ...]     # first MAX_LISTED, 1-based indices
    violation_count: int
    weight_sum: Optional[Fraction]    # None when some s_i < 1
    m: int
    t: int
    details: Dict = field(default_factory=dict)

    def as_dict(self):
        return {
            "mode": self.mode,
            "verdict": "holds" if self.holds else "fails",
            "m": self.m,
            "t": self.t,
            "violations": [list(v) for v in self.violations],
            "violation_count": self.violation_count,
            "weight_sum": self.weight_sum,
            **self.details,
        }


def _blocks(m, size=512):
    for lo in range(0, m, size):
        yield lo, min(m, lo + size)


def verify_pair_family(family: PairFamily, mode: str = "f") -> FamilyVerdict:
    """Check the within-pair and cross conditions exactly and add up the weights."""
    mode = _mode(mode)
    m, t = family.m, family.t
    if m == 0:
        raise EmptyFamilyError("empty family")
    viol: List[Tuple] = []
    count = 0
    for i, s in enumerate(family.s):
        if s < 1:
            count += 1
            if len(viol) < MAX_LISTED:
                viol.append((i + 1, i + 1, s + t))
    A = np.asarray(family.a, dtype=np.int64)
    B = np.asarray(family.b, dtype=np.int64)
    binary = family.alphabet.is_binary
    if binary:
        PA, PB = K.pack_bits(A), K.pack_bits(B)
    for lo, hi in _blocks(m):
        if binary:
            dab = K.packed_cross_distances(PA[lo:hi], PB)
            dba = K.packed_cross_distances(PB[lo:hi], PA) if mode == "f-prime" else None
        else:
            dab = K.cross_distances(A[lo:hi], B)
            dba = K.cross_distances(B[lo:hi], A) if mode == "f-prime" else None
        if mode == "f":
            bad = dab > t
        else:
            bad = (dab + dba) > 2 * t
        rows = np.arange(lo, hi)
        bad[rows - lo, rows] = False
        if mode == "f-prime":
            # each unordered pair once
            bad &= np.arange(m)[None, :] > rows[:, None]
        nb = int(bad.sum())
        if nb:
            count += nb
            for r, c in zip(*np.nonzero(bad)):
                if len(viol) >= MAX_LISTED:
                    break
                i, j = lo + int(r), int(c)
                viol.append((i + 1, j + 1, int(dab[r, c])) if mode == "f"
                            else (i + 1, j + 1, int(dab[r, c]), int(dba[r, c])))
    ws = None
    if all(s >= 1 for s in family.s):
        ws = sum((pair_weight(t, s) for s in family.s), Fraction(0))
    details = {"bound_m": 2 ** (t + 1)}
    return FamilyVerdict(mode, count == 0, tuple(viol), count, ws, m, t, details)


# ---------------------------------------------------------------------------
# the polynomial-dimension certificate

def prec_key(E) -> Tuple[int, int]:
    """Sort key for the total order on subsets: smaller sets first; among
    equal sizes ``E`` precedes ``F`` iff ``max(E - F) > max(F - E)``."""
    return (len(E), -sum(1 << k for k in E))


def precedes(E, F) -> bool:
    E, F = frozenset(E), frozenset(F)
    if E == F:
        return False
    if len(E) != len(F):
        return len(E) < len(F)
    return max(E - F) > max(F - E)


def compatible_pairs(family: PairFamily, i: int):
    """All ``(I1, I2)`` compatible with pair ``i``: ``I1`` a subset of ``D_i`` of
    size at least ``t + (s_i+1)/2``, or of size exactly ``t + s_i/2`` avoiding
    ``d_i`` (even ``s_i`` only); ``I2`` any subset of the other coordinates."""
    t = family.t
    D = family.D(i)
    s = len(D) - t
    rest = [k for k in range(family.n) if k not in D]
    lo = ceil(t + (s + 1) / 2)
    firsts = []
    for size in range(lo, len(D) + 1):
        firsts.extend(combinations(D, size))
    if s % 2 == 0:
        firsts.extend(combinations(D[:-1], t + s // 2))
    seconds = [c for r in range(len(rest) + 1) for c in combinations(rest, r)]
    for I1 in firsts:
        for I2 in seconds:
            yield I1, I2


@dataclass(frozen=True)
class DimensionCertificate:
    n: int
    counts: Tuple[int, ...]             # compatible pairs per i
    expected: Tuple[int, ...]           # V(t+s_i, s_i) 2^(n-t-s_i)
    total: int
    claim_same_violations: int          # i = j block: nonzero iff I1 = J1 and J2 subset of I2
    claim_cross_violations: int         # i != j: nonzero implies strictly earlier support
    triangular: bool
    rows: int
    records: Tuple = ()

    @property
    def holds(self) -> bool:
        return (self.counts == self.expected and self.claim_same_violations == 0
                and self.claim_cross_violations == 0 and self.triangular and self.total <= 2**self.n)

    def as_dict(self):
        return {
            "verdict": "holds" if self.holds else "fails",
            "n": self.n,
            "counts": list(self.counts),
            "expected_counts": list(self.expected),
            "total": self.total,
            "space_dimension": 2**self.n,
            "claim_same_violations": self.claim_same_violations,
            "claim_cross_violations": self.claim_cross_violations,
            "triangular": self.triangular,
        }


def dimension_certificate(family: PairFamily, keep_records=False, limit=None) -> DimensionCertificate:
    """Evaluate every product polynomial at every evaluation point.

    For compatible ``(I1, I2)`` of pair ``i`` the polynomial is
    ``prod_{k in I1+I2} (x_k - a_ik) * prod_{k in D_i - I1} (x_k - b_ik)`` and
    the evaluation point takes ``a_i`` on ``D_i - I1``, some symbol other
    than ``b_ik`` on ``I2`` and ``b_i`` elsewhere. With rows and columns sorted
    by support ``(D_i - I1) + I2`` the matrix is lower triangular with a
    nonzero diagonal, so the polynomials are independent.
    """
    verdict = verify_pair_family(family, "f")
    if not verdict.holds:
        raise ValueError("dimension certificate needs a family valid in mode f")
    n, t, m = family.n, family.t, family.m
    expected = tuple(volume(t + s, s) * 2 ** (n - t - s) for s in family.s)
    check_budget("dimension", sum(expected), limit)
    triples = []
    for i in range(m):
        for I1, I2 in compatible_pairs(family, i):
            triples.append((i, frozenset(I1), frozenset(I2)))
    counts = [0] * m
    for i, _, _ in triples:
        counts[i] += 1
    R = len(triples)
    X = np.empty((R, n), dtype=np.int64)
    F = np.full((R, n), -1, dtype=np.int64)
    supports = []
    for r, (i, I1, I2) in enumerate(triples):
        a, b = family.pairs[i]
        D = set(family.D(i))
        for k in range(n):
            if k in D and k not in I1:
                X[r, k] = a[k]
                F[r, k] = b[k]
            elif k in I2:
                X[r, k] = 1 if b[k] == 0 else 0
                F[r, k] = a[k]
            else:
                X[r, k] = b[k]
                if k in I1:
                    F[r, k] = a[k]
        supports.append((D - I1) | I2)
    order = sorted(range(R), key=lambda r: (prec_key(supports[r]), triples[r][0], sorted(triples[r][1]), sorted(triples[r][2])))
    X, F = X[order], F[order]
    triples = [triples[r] for r in order]
    supports = [supports[r] for r in order]
    M = K.nonzero_pattern(X, F)      # M[r, c]: polynomial c at point r is nonzero
    same_bad = 0
    cross_bad = 0
    owner = np.array([tr[0] for tr in triples])
    for r in range(R):
        i, I1, I2 = triples[r]
        nz = np.flatnonzero(M[r])
        same_block = np.flatnonzero(owner == i)
        nz_same = set(nz[owner[nz] == i].tolist())
        for c in same_block:
            _, J1, J2 = triples[c]
            want = (J1 == I1) and J2 <= I2
            if want != (c in nz_same):
                same_bad += 1
        for c in nz[owner[nz] != i]:
            if not precedes(supports[c], supports[r]):
                cross_bad += 1
    lower = ~np.triu(np.ones((R, R), dtype=bool), 1)
    triangular = bool(np.diag(M).all() and not (M & ~lower).any())
    records = ()
    if keep_records:
        records = tuple({"i": tr[0] + 1, "I1": sorted(k + 1 for k in tr[1]), "I2": sorted(k + 1 for k in tr[2]),
                         "point": X[r].tolist(), "support": sorted(k + 1 for k in supports[r])}
                        for r, tr in enumerate(triples))
    return DimensionCertificate(n, tuple(counts), expected, sum(counts), same_bad, cross_bad, triangular, R, records)


# ---------------------------------------------------------------------------
# the disjoint-events certificate (binary)

@dataclass(frozen=True)
class EventCertificate:
    n: int
    counts: Tuple[int, ...]               # |E_i| as a number of strings
    probabilities: Tuple[Fraction, ...]
    expected: Tuple[Fraction, ...]
    overlaps: int                         # strings lying in two or more events
    union: int

    @property
    def disjoint(self) -> bool:
        return self.overlaps == 0

    @property
    def holds(self) -> bool:
        return self.disjoint and self.probabilities == self.expected and self.union == sum(self.counts)

    def as_dict(self):
        return {
            "verdict": "holds" if self.holds else "fails",
            "n": self.n,
            "disjoint": self.disjoint,
            "overlaps": self.overlaps,
            "union": self.union,
            "probabilities": list(self.probabilities),
            "expected": list(self.expected),
            "total_probability": sum(self.probabilities, Fraction(0)),
        }


def _event_params(family: PairFamily):
    n, t = family.n, family.t
    a_bits, masks, lo, eq, top = [], [], [], [], []
    for i, (a, b) in enumerate(family.pairs):
        D = family.D(i)
        s = len(D) - t
        a_bits.append(K.point_bits(a))
        masks.append(sum(1 << (n - 1 - k) for k in D))
        lo.append(ceil(t + (s + 1) / 2))
        if s % 2 == 0:
            eq.append(t + s // 2)
            top.append(1 << (n - 1 - max(D)))
        else:
            eq.append(-1)
            top.append(0)
    return (np.array(a_bits, dtype=np.uint64), np.array(masks, dtype=np.uint64),
            np.array(lo, dtype=np.int64), np.array(eq, dtype=np.int64), np.array(top, dtype=np.uint64))


def disjoint_events_certificate(family: PairFamily, limit=None) -> EventCertificate:
    """For every ``alpha`` in ``{0,1}^n`` decide which events contain it.

    ``E_i`` holds when ``alpha`` agrees with ``a_i`` on at least
    ``t + (s_i+1)/2`` coordinates of ``D_i``, or (``s_i`` even) on exactly
    ``t + s_i/2`` of them but not on ``d_i = max D_i``.
    """
    if not family.alphabet.is_binary:
        raise AlphabetError("the events certificate is for binary families")
    verdict = verify_pair_family(family, "f-prime")
    if not verdict.holds:
        raise ValueError("events certificate needs a family valid in mode f-prime")
    n = family.n
    check_budget("events_n", n, limit)
    if n > 62:
        raise BudgetExceededError("events_n", n, 62)
    counts, overlaps, union = K.event_counts(n, *_event_params(family))
    counts = tuple(int(c) for c in counts)
    probs = tuple(Fraction(c, 2**n) for c in counts)
    expected = tuple(pair_weight(family.t, s) for s in family.s)
    return EventCertificate(n, counts, probs, expected, int(overlaps), int(union))


# ---------------------------------------------------------------------------
# random binary projection

@dataclass(frozen=True)
class Projection:
    family: PairFamily               # the projected binary family, all m pairs
    survivors: Tuple[int, ...]       # 0-based i with dist(a'_i, b'_i) >= t+1
    subsets: Tuple[Tuple[int, int], ...]

    def surviving_family(self) -> PairFamily:
        return self.family.subfamily(self.survivors)


def random_binary_projection(family: PairFamily, seed: int) -> Projection:
    """Pick a uniform 2-subset ``X_k`` of the alphabet per coordinate and
    replace each symbol by the indicator of membership in ``X_k``."""
    q = family.alphabet.size
    if q not in (3, 4):
        raise AlphabetError(f"projection needs an alphabet of size 3 or 4, got {q}")
    rng = np.random.default_rng(seed)
    choices = list(combinations(range(q), 2))
    picks = rng.integers(0, len(choices), size=family.n)
    subsets = tuple(choices[int(c)] for c in picks)

    def proj(p):
        return tuple(1 if p[k] in subsets[k] else 0 for k in range(family.n))

    pairs = tuple((proj(a), proj(b)) for a, b in family.pairs)
    pf = PairFamily(BINARY, family.n, family.t, pairs)
    surv = tuple(i for i, s in enumerate(pf.s) if s >= 1)
    return Projection(pf, surv, subsets)


# ---------------------------------------------------------------------------
# set pairs from codes

@dataclass(frozen=True)
class SetPairFamily:
    pairs: Tuple[Tuple[frozenset, frozenset], ...]
    s: int
    ell: int
    k: int

    @property
    def m(self) -> int:
        return len(self.pairs)

    def bound(self) -> Fraction:
        """``2^(s-2l-1) / sum_{i <= k-l} C(s-2l-1, i)``."""
        N = self.s - 2 * self.ell - 1
        return Fraction(2**N, sum(comb(N, i) for i in range(self.k - self.ell + 1)))


def setpair_family_from_code(code: Code, ell: int) -> SetPairFamily:
    """``A_i`` = support of codeword ``i`` plus ``ell`` shared extra elements,
    ``B_i`` = the complementary support plus the same extras. Extras are
    numbered ``n .. n+ell-1``."""
    if ell < 0:
        raise ValueError("ell must be non-negative")
    d = verify_min_distance(code) if code.size >= 2 else code.claimed_d
    if d % 2:
        raise ValueError(f"set pairs need an even minimum distance, got {d} (apply extend_parity)")
    n = code.n
    tail = frozenset(range(n, n + ell))
    pairs = []
    for w in code.codewords:
        A = frozenset(k for k in range(n) if w[k]) | tail
        B = frozenset(k for k in range(n) if not w[k]) | tail
        pairs.append((A, B))
    return SetPairFamily(tuple(pairs), n + 2 * ell, ell, d // 2 + ell - 1)


def verify_setpair_family(fam: SetPairFamily) -> FamilyVerdict:
    """``|A_i| + |B_i| = s``, ``|A_i & B_i| <= ell`` and
    ``|A_i & B_j| + |A_j & B_i| >= 2(k+1)`` for ``i != j``."""
    viol = []
    count = 0
    universe = sorted(set().union(*(A | B for A, B in fam.pairs))) if fam.pairs else []
    pos = {x: j for j, x in enumerate(universe)}

    def rows(sets):
        M = np.zeros((len(sets), len(universe)), dtype=np.uint8)
        for r, S in enumerate(sets):
            for x in S:
                M[r, pos[x]] = 1
        return K.pack_bits(M) if len(universe) else np.zeros((len(sets), 1), dtype=np.uint64)

    for i, (A, B) in enumerate(fam.pairs):
        if len(A) + len(B) != fam.s or len(A & B) > fam.ell:
            count += 1
            if len(viol) < MAX_LISTED:
                viol.append((i + 1, i + 1, len(A) + len(B), len(A & B)))
    if fam.m:
        PA = rows([A for A, _ in fam.pairs])
        PB = rows([B for _, B in fam.pairs])
        inter = K.packed_and_counts(PA, PB)     # |A_i & B_j|
        tot = inter + inter.T
        bad = np.triu(tot < 2 * (fam.k + 1), 1)
        nb = int(bad.sum())
        count += nb
        for i, j in zip(*np.nonzero(bad)):
            if len(viol) >= MAX_LISTED:
                break
            viol.append((int(i) + 1, int(j) + 1, int(tot[i, j])))
    details = {"s": fam.s, "ell": fam.ell, "k": fam.k, "bound": fam.bound()}
    return FamilyVerdict("set-pair", count == 0, tuple(viol), count, None, fam.m, fam.k, details)


# ---------------------------------------------------------------------------
# set-sequence systems

@dataclass(frozen=True)
class SetSequenceSystem:
    """Pairs of length-``n`` sequences of subsets of ``{0..a+b-1}``, stored as bitmasks."""

    n: int
    t: int
    a: int
    b: int
    A: np.ndarray       # (m, n) int64 bitmasks
    B: np.ndarray
    note: str = ""

    @property
    def m(self) -> int:
        return int(self.A.shape[0])

    def as_sets(self, i):
        def sets(row):
            return [sorted(x for x in range(self.a + self.b) if (int(v) >> x) & 1) for v in row]
        return sets(self.A[i]), sets(self.B[i])


def setseq_expected_size(n, t, a, b) -> int:
    return comb(n, t + 1) * (comb(a + b, a) - 2) ** (t + 1)


def setseq_family(n: int, t: int, a: int, b: int, limit=None) -> SetSequenceSystem:
    """``a_i`` runs over sequences in ``[l-1]^n`` with exactly ``n-t-1`` entries
    equal to ``l-1`` (``l = C(a+b, a)``); ``A_{i,k} = S_{a_ik}`` and
    ``B_{i,k} = T_{phi(a_ik)}`` where ``S_1..S_l`` are the ``a``-subsets in
    lexicographic order, ``T_j`` their complements and ``phi`` moves ``l-1``
    to ``l``."""
    if not n > t >= 0:
        raise ValueError("need n > t >= 0")
    if a < 1 or b < 1:
        raise ValueError("need a, b >= 1")
    ell = comb(a + b, a)
    size = setseq_expected_size(n, t, a, b) if ell >= 2 else 0
    if ell < 3:
        empty = np.zeros((0, n), dtype=np.int64)
        return SetSequenceSystem(n, t, a, b, empty, empty.copy(), note="C(a+b,a) < 3: the construction is empty")
    check_budget("setseq", size, limit)
    full = (1 << (a + b)) - 1
    S = [sum(1 << x for x in c) for c in combinations(range(a + b), a)]    # S[0..ell-1]
    T = [full ^ s for s in S]
    # symbols 0..ell-2 stand for 1..ell-1; "ell-1" is index ell-2, mapped by phi to index ell-1
    rows_a, rows_b = [], []
    for free in combinations(range(n), t + 1):
        for vals in product(range(ell - 2), repeat=t + 1):
            seq = [ell - 2] * n
            for k, v in zip(free, vals):
                seq[k] = v
            rows_a.append([S[v] for v in seq])
            rows_b.append([T[ell - 1 if v == ell - 2 else v] for v in seq])
    return SetSequenceSystem(n, t, a, b, np.array(rows_a, dtype=np.int64), np.array(rows_b, dtype=np.int64))


def verify_setseq(system: SetSequenceSystem) -> FamilyVerdict:
    """``dist(A_i, B_j) >= t+1`` exactly when ``i = j``, where the distance
    counts coordinates with disjoint entries."""
    m, t = system.m, system.t
    viol = []
    count = 0
    if m:
        D = K.disjoint_counts(system.A, system.B)
        big = D >= t + 1
        bad = big ^ np.eye(m, dtype=bool)
        count = int(bad.sum())
        for i, j in zip(*np.nonzero(bad)):
            if len(viol) >= MAX_LISTED:
                break
            viol.append((int(i) + 1, int(j) + 1, int(D[i, j])))
    details = {"n": system.n, "a": system.a, "b": system.b,
               "expected_m": setseq_expected_size(system.n, t, system.a, system.b)}
    if system.note:
        details["note"] = system.note
    return FamilyVerdict("set-sequence", count == 0, tuple(viol), count, None, m, t, details)


# ---------------------------------------------------------------------------
# seeded generators of valid families (fuzzing)

def _relabel(family: PairFamily, rng, q: int, n: int) -> PairFamily:
    """Pad with constant columns to length ``n``, permute coordinates and
    apply an independent symbol permutation per coordinate."""
    pad = n - family.n
    perm = rng.permutation(n)
    sym = [rng.permutation(q) for _ in range(n)]
    fill = [int(rng.integers(q)) for _ in range(pad)]

    def tr(p):
        full = list(p) + fill
        return tuple(int(sym[k][full[perm[k]]]) for k in range(n))

    return PairFamily(Alphabet(q), n, family.t, tuple((tr(a), tr(b)) for a, b in family.pairs))


def _greedy(rng, mode, q, n, t, tries):
    pairs = []
    A = np.zeros((0, n), dtype=np.int64)
    B = np.zeros((0, n), dtype=np.int64)
    for _ in range(tries):
        a = rng.integers(0, q, n)
        b = a.copy()
        flip = rng.choice(n, size=int(rng.integers(t + 1, n + 1)), replace=False)
        b[flip] = (a[flip] + rng.integers(1, q, flip.size)) % q
        if len(pairs):
            dab = (A != b).sum(axis=1)      # dist(a_j, b)
            dba = (B != a).sum(axis=1)      # dist(b_j, a) = dist(a, b_j)
            if mode == "f":
                if (dab > t).any() or (dba > t).any():
                    continue
            elif (dab + dba > 2 * t).any():
                continue
        pairs.append((tuple(int(x) for x in a), tuple(int(x) for x in b)))
        A = np.vstack([A, a])
        B = np.vstack([B, b])
    return PairFamily(Alphabet(q), n, t, tuple(pairs))


def random_valid_family(rng, mode="f", q=2, n_max=8, t_max=2, m_max=None) -> PairFamily:
    """A seeded random family valid in ``mode``: either greedy rejection
    sampling, or a relabelled, padded and thinned copy of a built-in
    extremal family."""
    mode = _mode(mode)
    t = int(rng.integers(0, t_max + 1))
    kind = int(rng.integers(0, 4))
    base = None
    if kind == 1 and t + 1 <= n_max:
        base = prop21_family(t)
    elif kind == 2 and t + 2 <= n_max:
        base = even_weight_family(t)
    elif kind == 3 and mode == "f-prime" and q == 2 and t + 3 <= n_max and t >= 1:
        from .codes import extend_parity, hamming_code, trivial_code
        code = extend_parity(trivial_code(t + 1)) if rng.integers(2) else hamming_code(2)
        if code.n > t:
            base = family_from_code(code, code.n - max(1, verify_min_distance(code)))
            t = base.t
    if base is not None:
        n = int(rng.integers(base.n, n_max + 1))
        fam = _relabel(base, rng, q, n)
        keep = sorted(int(i) for i in rng.choice(fam.m, size=int(rng.integers(1, fam.m + 1)), replace=False))
        if m_max is not None:
            keep = keep[:m_max]
        return fam.subfamily(keep)
    n = int(rng.integers(t + 1, n_max + 1))
    fam = _greedy(rng, mode, q, n, t, tries=int(rng.integers(5, 60)))
    if m_max is not None and fam.m > m_max:
        fam = fam.subfamily(range(m_max))
    return fam
