"""Constructive hitting sets for families of radius-``t`` balls.

Three procedures, each returning the points it builds together with exact
counts so the advertised guarantee can be checked without floating point:

* :func:`fractional_helly_pairs` uses only which pairs of balls meet;
* :func:`fractional_helly_tuples` uses which ``(t+2)``-tuples meet and works
  over any alphabet, finite or not;
* :func:`pq_hitting` hits every ball of a family in which any ``p`` balls
  contain ``q`` that meet.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import comb, factorial
from typing import Dict, List, Optional, Tuple

import numpy as np

from . import _kernels as K
from .budgets import budget as get_budget
from .core import Alphabet, BallFamily, Point, distance
from .errors import EmptyFamilyError, ExtensibleAlphabetError, HypothesisViolatedError, InvariantError
from .families import candidate_set, common_point, free_dimension

log = logging.getLogger(__name__)

# rational lower bound for e, used to certify (e l)^t forms exactly
E_LOWER = Fraction(271828182845, 10**11)


def candidate_bound(m: int, t: int) -> Fraction:
    """sum_{s<=t} (m t)^s / s!  (an upper bound on any candidate set of m centres)."""
    return sum((Fraction((m * t) ** s, factorial(s)) for s in range(t + 1)), Fraction(0))


def _hits(points, centers, t) -> np.ndarray:
    """Number of balls each point lies in."""
    if not len(points):
        return np.zeros(0, dtype=np.int64)
    D = K.cross_distances(np.asarray(points, dtype=np.int64), np.asarray(centers, dtype=np.int64))
    return (D <= t).sum(axis=1)


def _best_point(points, centers, t):
    """Point hitting the most balls; ties go to the earliest point in ``points``."""
    h = _hits(points, centers, t)
    j = int(np.argmax(h))
    return points[j], int(h[j])


# ---------------------------------------------------------------------------
# covering lemma

def covering_size_bound(t: int, delta: int, q: int) -> int:
    return comb(4 * t - delta, t - delta) * q ** (t - delta)


def covering_by_distance(a: Point, b: Point, t: int, delta: int, alphabet: Alphabet) -> List[Point]:
    """Points hitting every ``B(p, t)`` with ``dist(a, p) <= min(dist(a, b), 2t - delta)``
    and ``dist(b, p) <= 2t``.

    The points change ``a`` in at most ``t - delta`` coordinates where ``a``
    and ``b`` differ. When ``a`` itself already lies in all such balls the
    answer is ``[a]`` and the alphabet is never enumerated.
    """
    a, b = tuple(a), tuple(b)
    n = len(a)
    if len(b) != n:
        raise ValueError("length mismatch")
    if not 0 <= delta <= t:
        raise ValueError(f"need 0 <= delta <= t, got delta={delta}, t={t}")
    dab = distance(a, b)
    if delta == t or dab <= t or dab > 4 * t - delta or t >= n:
        return [a]
    q = alphabet.size
    if q is None:
        raise ExtensibleAlphabetError("covering with delta < t enumerates the alphabet")
    D = [k for k in range(n) if a[k] != b[k]]
    out = []
    for s in range(t - delta + 1):
        for S in combinations(D, s):
            alts = [[x for x in range(q) if x != a[k]] for k in S]
            for vals in product(*alts):
                y = list(a)
                for k, x in zip(S, vals):
                    y[k] = x
                out.append(tuple(y))
    if len(out) > covering_size_bound(t, delta, q):
        raise InvariantError("covering set larger than its bound")
    return out


# ---------------------------------------------------------------------------
# fractional Helly from pairs

@dataclass(frozen=True)
class FractionalReport:
    point: Point
    hits: int
    alpha: Fraction
    required: Fraction          # the count the guarantee promises
    applicable: bool            # hypotheses of the guarantee met
    guarantee: str              # "holds", "fails", "not-applicable", "sampled"
    details: Dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.guarantee in ("holds", "not-applicable")

    def as_dict(self):
        return {
            "point": list(self.point),
            "hits": self.hits,
            "alpha": self.alpha,
            "required": self.required,
            "applicable": self.applicable,
            "guarantee": self.guarantee,
            **self.details,
        }


def _intersect_graph(centers, t):
    C = np.asarray(centers, dtype=np.int64)
    D = K.cross_distances(C, C)
    adj = D <= 2 * t
    np.fill_diagonal(adj, False)
    return D, adj


def pairs_required(alpha: Fraction, m: int, t: int, q: int) -> Fraction:
    return alpha * alpha * m / (24 * comb(4 * t, t) * q**t)


def fractional_helly_pairs(family: BallFamily) -> FractionalReport:
    """A point in many balls, found from the pairwise-intersection graph.

    Vertices below degree ``alpha(m-1)/2`` are peeled (lowest index first);
    from the smallest surviving vertex ``u`` every path ``u-v-w`` yields an
    ordered triple ``(u, y, z)`` with ``dist(a_u, a_z) <= min(dist(a_u, a_y), 2t)``
    and ``dist(a_y, a_z) <= 2t``. The middle vertex ``y`` with the most such
    ``z`` (smallest on ties) feeds :func:`covering_by_distance`, whose best
    point is returned.
    """
    if family.m == 0:
        raise EmptyFamilyError("empty family")
    q = family.alphabet.require_finite("fractional_helly_pairs")
    m, t, centers = family.m, family.t, family.centers
    D, adj = _intersect_graph(centers, t)
    edges = int(adj.sum()) // 2
    alpha = Fraction(edges, comb(m, 2)) if m >= 2 else Fraction(1)
    required = pairs_required(alpha, m, t, q)
    applicable = alpha > Fraction(12, m)
    details = {"edges": edges}
    if not applicable:
        pt, h = _best_point(list(centers), centers, t)
        return FractionalReport(pt, h, alpha, required, False, "not-applicable", details)

    thr = alpha * (m - 1) / 2
    alive = np.ones(m, dtype=bool)
    deg = adj.sum(axis=1).astype(np.int64)
    changed = True
    while changed:
        changed = False
        for v in range(m):
            if alive[v] and deg[v] < thr:
                alive[v] = False
                deg -= adj[v].astype(np.int64)
                changed = True
                break
    if not alive.any():
        raise InvariantError("peeling removed every vertex although e(G) >= alpha C(m,2)")
    u = int(np.flatnonzero(alive)[0])
    good = set()
    for v in np.flatnonzero(adj[u] & alive):
        for w in np.flatnonzero(adj[v] & alive):
            if w == u:
                continue
            if not adj[u, w] or D[u, v] <= D[u, w]:
                good.add((int(w), int(v)))      # (u, w, v)
            else:
                good.add((int(v), int(w)))      # (u, v, w)
    groups: Dict[int, List[int]] = {}
    for y, z in sorted(good):
        groups.setdefault(y, []).append(z)
    y = min(groups, key=lambda k: (-len(groups[k]), k))
    Wset = groups[y]
    Y = covering_by_distance(centers[u], centers[y], t, 0, family.alphabet)
    covered = _hits(Y, [centers[z] for z in Wset], t)
    # every ball in W must be hit by some point of Y
    Dyw = K.cross_distances(np.asarray(Y, dtype=np.int64), np.asarray([centers[z] for z in Wset], dtype=np.int64))
    if not (Dyw <= t).any(axis=0).all():
        raise InvariantError("covering set missed a ball it must hit")
    pt, h = _best_point(Y, centers, t)
    details.update({
        "peeled_to": int(alive.sum()),
        "u": u + 1,
        "v": y + 1,
        "good_triples": len(good),
        "W_size": len(Wset),
        "covering_size": len(Y),
        "max_hits_in_W": int(covered.max()),
    })
    ok = h >= required
    return FractionalReport(pt, h, alpha, required, True, "holds" if ok else "fails", details)


# ---------------------------------------------------------------------------
# fractional Helly from (t+2)-tuples

class TupleCensus:
    """The intersecting ``k``-subsets of a family, as bitmasks over ball indices."""

    def __init__(self, family: BallFamily, k: int, tuples=None, seed=0, limit=None):
        self.m = family.m
        self.k = k
        self.total = comb(self.m, k)
        self.words = max(1, -(-self.m // 64))
        self.sampled = False
        limit = get_budget("tuples", limit)
        if tuples is not None:
            good = [tuple(sorted(x)) for x in tuples]
        elif self.total > limit:
            good = self._sample(family, k, seed, limit)
            self.sampled = True
        else:
            good = self._enumerate(family, k)
        self.good = good
        self.masks = np.zeros((len(good), self.words), dtype=np.uint64)
        for r, tup in enumerate(good):
            for i in tup:
                self.masks[r, i >> 6] |= np.uint64(1) << np.uint64(i & 63)

    def _enumerate(self, family, k):
        m, t = family.m, family.t
        _, adj = _intersect_graph(family.centers, t)
        q = family.alphabet.size
        use_bits = q is not None and q**family.n <= 2**16
        if use_bits:
            pts = np.array(list(product(range(q), repeat=family.n)), dtype=np.int64)
            inball = K.cross_distances(np.asarray(family.centers, dtype=np.int64), pts) <= t
        good = []

        def rec(start, chosen, acc):
            if len(chosen) == k:
                good.append(tuple(chosen))
                return
            for i in range(start, m - (k - len(chosen)) + 1):
                if any(not adj[i, j] and family.centers[i] != family.centers[j] for j in chosen):
                    continue
                if use_bits:
                    nxt = inball[i] if acc is None else acc & inball[i]
                    if not nxt.any():
                        continue
                else:
                    nxt = None
                    if len(chosen) >= 2 and common_point([family.centers[j] for j in chosen + [i]], t) is None:
                        continue
                chosen.append(i)
                rec(i + 1, chosen, nxt)
                chosen.pop()

        rec(0, [], None)
        return good

    def _sample(self, family, k, seed, n_samples):
        rng = np.random.default_rng(seed)
        n_samples = min(n_samples, 10**5)
        good = []
        for _ in range(n_samples):
            tup = sorted(int(x) for x in rng.choice(family.m, size=k, replace=False))
            if common_point([family.centers[i] for i in tup], family.t) is not None:
                good.append(tuple(tup))
        self.scale = Fraction(self.total, n_samples)
        return good

    @property
    def alpha(self) -> Fraction:
        if self.sampled:
            return Fraction(len(self.good)) * self.scale / self.total
        return Fraction(len(self.good), self.total) if self.total else Fraction(0)

    def count_containing(self, indices) -> Fraction:
        want = np.zeros(self.words, dtype=np.uint64)
        for i in indices:
            want[i >> 6] |= np.uint64(1) << np.uint64(i & 63)
        hit = ((self.masks & want) == want).all(axis=1)
        c = int(hit.sum())
        return Fraction(c) * self.scale if self.sampled else Fraction(c)


def fractional_helly_tuples(family: BallFamily, tuples=None, seed=0, limit=None) -> FractionalReport:
    """A point in many balls, found from the intersecting ``(t+2)``-tuples.

    Builds a chain ``i_1, ..., i_l`` (``l <= t+1``) whose free dimensions drop
    strictly and which lies in many intersecting tuples, extending greedily
    with the smallest admissible index until no extension exists. The balls
    ``I`` that would keep the tuple count high all share the chain's free
    dimension, so the chain's candidate set hits them; its best point is
    returned. ``tuples`` may supply the intersecting tuples directly.
    """
    m, t = family.m, family.t
    k = t + 2
    if m < k:
        raise ValueError(f"need m >= t+2 = {k} balls, got {m}")
    census = TupleCensus(family, k, tuples=tuples, seed=seed, limit=limit)
    alpha = census.alpha
    centers = family.centers
    if alpha == 0:
        pt, h = _best_point(list(centers), centers, t)
        return FractionalReport(pt, h, alpha, Fraction(0), False, "not-applicable", {"chain": []})

    def need(ell):
        # tuples a chain of length ell must lie in
        return Fraction(k + 1 - ell, k) * alpha * comb(m - ell, k - ell)

    counts = [census.count_containing([i]) for i in range(m)]
    i1 = max(range(m), key=lambda i: (counts[i], -i))
    if counts[i1] < need(1):
        raise InvariantError("no index lies in the average number of intersecting tuples")
    chain = [i1]
    frees = [free_dimension([centers[i1]], t).value]
    while len(chain) < t + 1:
        ell = len(chain)
        ext = None
        for j in range(m):
            if j in chain:
                continue
            if census.count_containing(chain + [j]) < need(ell + 1):
                continue
            f = free_dimension([centers[i] for i in chain + [j]], t).value
            if f is not None and f < frees[-1]:
                ext = (j, f)
                break
        if ext is None:
            break
        chain.append(ext[0])
        frees.append(ext[1])
    ell = len(chain)
    thr_I = Fraction(k - ell, k) * alpha * comb(m - ell - 1, k - 1 - ell) if ell < k else Fraction(0)
    I = [j for j in range(m) if j not in chain and census.count_containing(chain + [j]) >= thr_I]
    W = candidate_set([centers[i] for i in chain], t)
    if not W.points:
        raise InvariantError("chain balls do not intersect")
    S = W.size_bound()
    hitI = K.cross_distances(np.asarray(W.points, dtype=np.int64), np.asarray([centers[j] for j in I], dtype=np.int64)) <= t if I else None
    if hitI is not None and not census.sampled and not hitI.any(axis=0).all():
        raise InvariantError("candidate set of the chain misses a ball of I")
    pt, h = _best_point(list(W.points), centers, t)
    required = alpha * (m - ell) / (k * S)
    # (e l)^t >= E_LOWER^t l^t >= S, so hits >= alpha(m-l)/((t+2) E_LOWER^t l^t) implies the e-form
    e_form = alpha * (m - ell) / (k * (E_LOWER * ell) ** t)
    ok = h >= required and h >= e_form
    details = {
        "chain": [i + 1 for i in chain],
        "chain_free": frees,
        "ell": ell,
        "I_size": len(I),
        "I_lower": alpha * (m - ell) / k,
        "candidates": len(W.points),
        "candidate_bound": S,
        "required_e_form": e_form,
        "good_tuples": len(census.good),
        "census": "sampled" if census.sampled else "exhaustive" if tuples is None else "supplied",
    }
    verdict = "sampled" if census.sampled else ("holds" if ok else "fails")
    return FractionalReport(pt, h, alpha, required, True, verdict, details)


# ---------------------------------------------------------------------------
# (p, q) hitting sets

@dataclass(frozen=True)
class HittingReport:
    points: Tuple[Point, ...]
    assignment: Tuple[Optional[int], ...]   # index into points for each ball, None if unhit
    size_bound: Fraction
    guarantee: bool
    details: Dict = field(default_factory=dict)

    @property
    def complete(self) -> bool:
        return all(a is not None for a in self.assignment)

    def as_dict(self):
        return {
            "points": [list(p) for p in self.points],
            "size": len(self.points),
            "assignment": [None if a is None else a + 1 for a in self.assignment],
            "complete": self.complete,
            "size_bound": self.size_bound,
            "guarantee": self.guarantee,
            **self.details,
        }


def _sum_binom_below(p, q):
    return sum(comb(p, j) for j in range(q))


def pq_bound(p: int, q: int, t: int, alphabet_size) -> Fraction:
    """Size bound assembled from the proof's inequalities, with the exact
    candidate-set bound in place of ``(e(q-1))^t``."""
    Sq = candidate_bound(q - 1, t)
    first = _sum_binom_below(p, q) * Sq
    if q == t + 2:
        return first
    return first + comb(p, q - 1) * Sq * p * comb(4 * t + 2 - q, t + 2 - q) * alphabet_size ** (t + 2 - q)


def pq_bound_e_form(p: int, q: int, t: int, alphabet_size) -> float:
    """The same bound with ``(e(q-1))^t`` and ``(eq)^t`` written out (a float, for display)."""
    e = float(np.e)
    first = _sum_binom_below(p, q) * (e * (q - 1)) ** t
    if q == t + 2:
        return first
    return first + comb(p, q - 1) * (e * q) ** t * p * comb(4 * t + 2 - q, t + 2 - q) * alphabet_size ** (t + 2 - q)


def _assign(points, centers, t):
    if not points:
        return [None] * len(centers)
    D = K.cross_distances(np.asarray(centers, dtype=np.int64), np.asarray(points, dtype=np.int64))
    ok = D <= t
    first = np.argmax(ok, axis=1)
    return [int(first[i]) if ok[i, first[i]] else None for i in range(len(centers))]


def pq_hitting(family: BallFamily, p: int, q: int) -> HittingReport:
    """Points hitting every ball, assuming any ``p`` balls contain ``q`` that meet.

    The hypothesis is not checked up front. If it fails in a way the
    construction notices, :class:`HypothesisViolatedError` names the balls.
    """
    if family.m == 0:
        raise EmptyFamilyError("empty family")
    t = family.t
    if not (p >= q >= 2):
        raise ValueError(f"need p >= q >= 2, got p={p}, q={q}")
    if q > t + 2:
        raise ValueError(f"need q <= t+2 = {t + 2}, got q={q}")
    qa = family.alphabet.size
    if q <= t + 1 and qa is None:
        raise ExtensibleAlphabetError("pq_hitting with q <= t+1 needs a finite alphabet")
    centers = family.centers
    A = list(dict.fromkeys(centers))
    bound = pq_bound(p, q, t, qa or 0)
    e_bound = pq_bound_e_form(p, q, t, qa or 0)

    everyone = common_point(A, t)
    if everyone is not None:
        pts = (everyone,)
        assignment = tuple(_assign(list(pts), centers, t))
        return HittingReport(pts, assignment, bound, True, {"ell": 0, "shortcut": "common point", "bound_e_form": repr(e_bound)})

    cache: Dict[Tuple[int, ...], Optional[int]] = {}

    def free_of(idx):
        key = tuple(sorted(set(idx)))
        if key not in cache:
            cache[key] = free_dimension([A[i] for i in key], t).value
        return cache[key]

    def fv(idx):
        f = free_of(idx)
        return -1 if f is None else f

    # maximal sequence x_1..x_l of indices into A
    xs = [0]
    for a in range(1, len(A)):
        ok = True
        for S in combinations(xs, q - 1):
            if fv(S + (a,)) >= 0:
                ok = False
                break
        if ok:
            for size in range(1, q - 1):
                for S in combinations(xs, size):
                    if fv(S) >= 0 and fv(S + (a,)) >= fv(S):
                        ok = False
                        break
                if not ok:
                    break
        if ok:
            xs.append(a)
            if len(xs) >= p:
                bad = [centers.index(A[i]) + 1 for i in xs[:p]]
                raise HypothesisViolatedError(
                    f"balls {bad} contain no {q} with a common point", ball=bad[-1])
    ell = len(xs)

    # case (1): some J with |J| < q and free(J + a) = free(J) >= 0
    case1: Dict[int, Tuple[int, ...]] = {}
    case2: Dict[Tuple[int, ...], List[int]] = {}
    for a in range(len(A)):
        found = None
        for size in range(1, q):
            for J in combinations(xs, size):
                f = fv(J)
                if f >= 0 and fv(J + (a,)) == f:
                    found = J
                    break
            if found:
                break
        if found is not None:
            case1[a] = found
            continue
        for J in combinations(xs, q - 1):
            fa = fv(J + (a,))
            if 0 <= fa < fv(J):
                case2.setdefault(J, []).append(a)
                found = J
                break
        if found is None:
            raise InvariantError(f"ball {centers.index(A[a]) + 1} fits neither case although the sequence is maximal")

    W_sets: Dict[Tuple[int, ...], Tuple[Point, ...]] = {}
    for size in range(1, q):
        for J in combinations(xs, size):
            if fv(J) >= 0:
                W_sets[J] = candidate_set([A[i] for i in J], t).points
    points = []
    for J in sorted(W_sets):
        points.extend(W_sets[J])

    y_sizes = {}
    for J, members in sorted(case2.items()):
        WJ = W_sets.get(J, ())
        if not WJ:
            raise InvariantError("balls assigned to an empty candidate set")
        WJa = np.asarray(WJ, dtype=np.int64)
        dW = {a: int(K.cross_distances(np.asarray([A[a]], dtype=np.int64), WJa).min()) for a in members}
        for a, d in dW.items():
            if d > 2 * t + 2 - q:
                raise InvariantError(f"distance {d} from ball {a + 1} to its candidate set exceeds 2t+2-q")
        picks = []
        remaining = list(members)
        while remaining:
            nxt = max(remaining, key=lambda a: (dW[a], -a))
            picks.append(nxt)
            remaining = [a for a in remaining if all(distance(A[a], A[x]) > 2 * t for x in picks)]
            if len(picks) >= p:
                bad = [centers.index(A[i]) + 1 for i in picks[:p]]
                raise HypothesisViolatedError(f"balls {bad} are pairwise disjoint", ball=bad[-1])
        YJ = []
        for w in WJ:
            for x in picks:
                YJ.extend(covering_by_distance(w, A[x], t, q - 2, family.alphabet))
        y_sizes[J] = (len(picks), len(YJ))
        points.extend(YJ)

    points = tuple(dict.fromkeys(points))
    assignment = tuple(_assign(list(points), centers, t))
    for i, a in enumerate(assignment):
        if a is None:
            raise HypothesisViolatedError(f"ball {i + 1} is not hit; the (p,q) property fails", ball=i + 1)
    details = {
        "ell": ell,
        "sequence": [centers.index(A[i]) + 1 for i in xs],
        "case1": len(case1),
        "case2": sum(len(v) for v in case2.values()),
        "bound_e_form": repr(e_bound),
        "greedy": {",".join(str(i + 1) for i in J): {"k": k, "points": n} for J, (k, n) in y_sizes.items()},
    }
    return HittingReport(points, assignment, bound, len(points) <= bound, details)
