"""Threshold embeddings of graphs into Hamming space.

An embedding maps vertices injectively to length-``d`` integer strings so
that two vertices are adjacent exactly when their images differ in at
least ``t`` coordinates. The least such ``t`` is the threshold Prague
dimension; this module builds embeddings for a few graph families and
certifies lower bounds with induced matchings and a cut-counting argument.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import _kernels as K
from .budgets import check as check_budget, budget as get_budget
from .core import Point
from .errors import FormatError, LengthMismatchError


@dataclass(frozen=True)
class Graph:
    v: int
    edges: Tuple[Tuple[int, int], ...]     # 0-based, i < j, sorted

    def __post_init__(self):
        es = set()
        for a, b in self.edges:
            a, b = int(a), int(b)
            if a == b:
                raise ValueError(f"loop at vertex {a + 1}")
            if not (0 <= a < self.v and 0 <= b < self.v):
                raise ValueError(f"edge ({a + 1},{b + 1}) outside 1..{self.v}")
            es.add((min(a, b), max(a, b)))
        object.__setattr__(self, "edges", tuple(sorted(es)))

    def adjacency(self) -> np.ndarray:
        M = np.zeros((self.v, self.v), dtype=bool)
        for a, b in self.edges:
            M[a, b] = M[b, a] = True
        return M

    def neighbour_masks(self) -> List[int]:
        nb = [0] * self.v
        for a, b in self.edges:
            nb[a] |= 1 << b
            nb[b] |= 1 << a
        return nb

    @classmethod
    def from_edge_list(cls, text: str) -> "Graph":
        """``v e`` on the first line, then ``e`` lines ``i j`` with 1-based vertices."""
        lines = [ln.split("#")[0].strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln]
        if not lines:
            raise FormatError("empty edge list")
        try:
            v, e = (int(x) for x in lines[0].split())
            edges = []
            for ln in lines[1:]:
                a, b = (int(x) for x in ln.split())
                edges.append((a - 1, b - 1))
        except ValueError:
            raise FormatError("edge list lines must hold two integers") from None
        if len(edges) != e:
            raise FormatError(f"header announces {e} edges, found {len(edges)}")
        return cls(v, tuple(edges))

    def to_edge_list(self) -> str:
        return "\n".join([f"{self.v} {len(self.edges)}"] + [f"{a + 1} {b + 1}" for a, b in self.edges]) + "\n"


def complete_graph(v: int) -> Graph:
    return Graph(v, tuple(combinations(range(v), 2)))


def perfect_matching(s: int) -> Graph:
    return Graph(2 * s, tuple((2 * i, 2 * i + 1) for i in range(s)))


def kneser_graph(n: int, k: int) -> Tuple[Graph, List[Tuple[int, ...]]]:
    verts = list(combinations(range(n), k))
    edges = tuple((i, j) for i, j in combinations(range(len(verts)), 2) if not set(verts[i]) & set(verts[j]))
    return Graph(len(verts), edges), verts


@dataclass(frozen=True)
class ThresholdEmbedding:
    graph: Graph
    d: int
    t: int
    points: Tuple[Point, ...]      # image of vertex i

    def as_dict(self):
        return {"v": self.graph.v, "d": self.d, "t": self.t, "edges": [[a + 1, b + 1] for a, b in self.graph.edges],
                "points": [list(p) for p in self.points]}


@dataclass(frozen=True)
class EmbeddingVerdict:
    valid: bool
    injective: bool
    violation: Optional[Tuple[int, int, int, bool]]   # (u, v, distance, adjacent), 1-based
    violations: int

    def as_dict(self):
        return {"verdict": "holds" if self.valid else "fails", "injective": self.injective,
                "violations": self.violations,
                "first_violation": None if self.violation is None else
                {"u": self.violation[0], "v": self.violation[1], "distance": self.violation[2], "adjacent": self.violation[3]}}


def verify_threshold_embedding(e: ThresholdEmbedding) -> EmbeddingVerdict:
    """Check injectivity and ``adjacent <=> dist >= t`` over all vertex pairs."""
    v = e.graph.v
    if len(e.points) != v:
        raise LengthMismatchError(f"{len(e.points)} points for {v} vertices")
    for p in e.points:
        if len(p) != e.d:
            raise LengthMismatchError(f"point of length {len(p)}, expected {e.d}")
    if v == 0:
        return EmbeddingVerdict(True, True, None, 0)
    P = np.asarray(e.points, dtype=np.int64).reshape(v, e.d)
    D = K.cross_distances(P, P)
    adj = e.graph.adjacency()
    iu = np.triu_indices(v, 1)
    injective = bool((D[iu] > 0).all())
    bad = (D >= e.t) != adj
    bad = np.triu(bad, 1)
    count = int(bad.sum())
    first = None
    if count:
        i, j = (int(x) for x in np.argwhere(bad)[0])
        first = (i + 1, j + 1, int(D[i, j]), bool(adj[i, j]))
    return EmbeddingVerdict(injective and count == 0, injective, first, count)


def kneser_embedding(n: int, k: int) -> ThresholdEmbedding:
    """Indicator vectors of the ``k``-subsets of ``[n]`` at threshold ``2k-1``:
    disjoint subsets differ in ``2k`` places, intersecting ones in at most ``2k-2``."""
    if not 1 <= k or 2 * k > n:
        raise ValueError(f"need 1 <= k <= n/2, got n={n}, k={k}")
    from math import comb
    check_budget("helly_points", comb(n, k))
    g, verts = kneser_graph(n, k)
    pts = tuple(tuple(1 if x in S else 0 for x in range(n)) for S in verts)
    return ThresholdEmbedding(g, n, 2 * k - 1, pts)


def disjoint_cliques_graph(m: int) -> Graph:
    edges = list(combinations(range(m), 2)) + [(m + i, m + j) for i, j in combinations(range(m), 2)]
    return Graph(2 * m, tuple(edges))


def disjoint_cliques_embedding(m: int) -> ThresholdEmbedding:
    """Two disjoint ``m``-cliques at threshold ``m``: ``u_i`` is the constant
    string ``i``, ``v_i`` counts up cyclically from ``i``. Vertices
    ``0..m-1`` are the ``u_i`` and ``m..2m-1`` the ``v_i``.

    For ``m = 1`` the two isolated vertices need distinct images at distance
    below the threshold, so the length is padded to 2 and the threshold is 2.
    """
    if not 1 <= m <= 64:
        raise ValueError(f"need 1 <= m <= 64, got {m}")
    g = disjoint_cliques_graph(m)
    if m == 1:
        return ThresholdEmbedding(g, 2, 2, ((0, 0), (0, 1)))
    us = tuple(tuple([i] * m) for i in range(m))
    vs = tuple(tuple((i + k) % m for k in range(m)) for i in range(m))
    return ThresholdEmbedding(g, m, m, us + vs)


def clique_plus_vertex_embedding(n: int) -> ThresholdEmbedding:
    """``K_n`` on standard basis vectors plus an isolated vertex at zero, threshold 2.

    The ordinary Prague dimension of this graph is ``n``; the threshold
    version stays at most 2.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    g = Graph(n + 1, tuple(combinations(range(n), 2)))
    pts = tuple(tuple(1 if x == i else 0 for x in range(n)) for i in range(n)) + (tuple([0] * n),)
    return ThresholdEmbedding(g, n, 2, pts)


# ---------------------------------------------------------------------------
# lower bounds

@dataclass(frozen=True)
class MatchingBound:
    size: int
    edges: Tuple[Tuple[int, int], ...]
    exact: bool

    @property
    def bound(self) -> int:
        """Smallest integer at least ``log2(size)``."""
        return (self.size - 1).bit_length() if self.size >= 1 else 0

    def as_dict(self):
        return {"size": self.size, "tpd_lower_bound": self.bound, "exact": self.exact,
                "edges": [[a + 1, b + 1] for a, b in self.edges]}


def is_induced_matching(g: Graph, edges) -> bool:
    adj = g.adjacency()
    verts = [x for e in edges for x in e]
    if len(set(verts)) != len(verts):
        return False
    for (a, b), (c, d) in combinations(edges, 2):
        if adj[a, c] or adj[a, d] or adj[b, c] or adj[b, d]:
            return False
    return all(adj[a, b] for a, b in edges)


def induced_matching_lower_bound(g: Graph, exact: Optional[bool] = None) -> MatchingBound:
    """Largest induced matching (branch and bound) for small graphs, a greedy
    maximal one otherwise. A size-``s`` induced matching forces threshold
    Prague dimension at least ``log2 s``."""
    if exact is None:
        exact = g.v <= get_budget("matching_exact")
    if not exact:
        used = 0
        chosen = []
        nb = g.neighbour_masks()
        for a, b in g.edges:
            if not (used >> a) & 1 and not (used >> b) & 1:
                chosen.append((a, b))
                used |= nb[a] | nb[b] | (1 << a) | (1 << b)
        return MatchingBound(len(chosen), tuple(chosen), False)
    nb = g.neighbour_masks()
    closed = [nb[x] | (1 << x) for x in range(g.v)]
    best: Dict[str, list] = {"edges": []}
    cur: List[Tuple[int, int]] = []

    def rec(avail):
        if len(cur) > len(best["edges"]):
            best["edges"] = list(cur)
        if len(cur) + bin(avail).count("1") // 2 <= len(best["edges"]):
            return
        if not avail:
            return
        x = (avail & -avail).bit_length() - 1
        ys = nb[x] & avail
        while ys:
            y = (ys & -ys).bit_length() - 1
            ys &= ys - 1
            cur.append((x, y))
            rec(avail & ~(closed[x] | closed[y]))
            cur.pop()
        rec(avail & ~(1 << x))

    rec((1 << g.v) - 1)
    return MatchingBound(len(best["edges"]), tuple(sorted(best["edges"])), True)


@dataclass(frozen=True)
class CutCheck:
    C1: int
    C2: int

    @property
    def holds(self) -> bool:
        return self.C1 <= self.C2

    def as_dict(self):
        return {"C1": self.C1, "C2": self.C2, "verdict": "holds" if self.holds else "fails"}


def cut_inequality_check(points_U: Sequence[Point], points_V: Sequence[Point]) -> CutCheck:
    """``C1`` sums distances inside ``U`` and inside ``V``; ``C2`` sums the
    ``|U||V|`` cross distances. Coordinatewise, ``C1 - C2`` is a sum of
    ``s_a t_a - (s_a^2 + t_a^2)/2 <= 0``, so ``C1 <= C2`` always."""
    m = len(points_U)
    if m != len(points_V) or m < 1:
        raise LengthMismatchError("need |U| = |V| >= 1")
    U = np.asarray(points_U, dtype=np.int64)
    V = np.asarray(points_V, dtype=np.int64)
    if U.shape[1] != V.shape[1]:
        raise LengthMismatchError("U and V points differ in length")
    duu = K.cross_distances(U, U)
    dvv = K.cross_distances(V, V)
    duv = K.cross_distances(U, V)
    C1 = int(np.triu(duu, 1).sum() + np.triu(dvv, 1).sum())
    C2 = int(duv.sum())
    return CutCheck(C1, C2)


def cliques_threshold_lower_bound(m: int) -> int:
    """Least ``t`` for which ``2 C(m,2) t <= m^2 (t-1)`` is possible.

    A valid embedding of two disjoint ``m``-cliques at threshold ``t`` has
    ``2 C(m,2) t <= C1 <= C2 <= m^2 (t-1)``, so smaller ``t`` are impossible.
    """
    if m < 2:
        raise ValueError("needs m >= 2")
    t = 1
    while 2 * (m * (m - 1) // 2) * t > m * m * (t - 1):
        t += 1
    return t


def search_embedding(g: Graph, t: int, d: int, symbols: int, limit=None) -> Optional[ThresholdEmbedding]:
    """Backtracking search for an embedding into ``[symbols]^d`` at threshold
    ``t`` (tiny graphs only). Vertex 1 is pinned to the zero string."""
    check_budget("helly_points", symbols**d, limit)
    pts = [tuple(p) for p in product(range(symbols), repeat=d)]
    P = np.asarray(pts, dtype=np.int64)
    D = K.cross_distances(P, P)
    adj = g.adjacency()
    chosen: List[int] = []

    def rec(vtx):
        if vtx == g.v:
            return True
        cands = [0] if vtx == 0 else range(len(pts))
        for c in cands:
            if c in chosen:
                continue
            if all((D[c, chosen[u]] >= t) == adj[vtx, u] for u in range(vtx)):
                chosen.append(c)
                if rec(vtx + 1):
                    return True
                chosen.pop()
        return False

    if rec(0):
        return ThresholdEmbedding(g, d, t, tuple(pts[c] for c in chosen))
    return None
