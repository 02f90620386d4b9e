"""Acceptance checks, one test per criterion, each at its stated tolerance.

Every test records a PASS/FAIL line that is repeated in the terminal
summary under "acceptance criteria".
"""
import time
from itertools import product
from math import comb

import numpy as np
import pytest

from helly import Alphabet, BallFamily, BINARY, pair_weight
from helly import _kernels as K
from helly.codes import golay_code, hamming_code, verify_min_distance
from helly.extremal import (dimension_certificate, disjoint_events_certificate, even_weight_family, family_from_code,
                            prop21_family, random_binary_projection, random_valid_family, setseq_expected_size,
                            setseq_family, ternary_family, verify_pair_family, verify_setseq)
from helly.families import irredundant_core
from helly.hitting import (candidate_bound, covering_by_distance, covering_size_bound, fractional_helly_pairs,
                           fractional_helly_tuples, pq_hitting)
from helly.oracle import exhaustive_helly
from helly.prague import (clique_plus_vertex_embedding, cut_inequality_check, disjoint_cliques_embedding,
                          induced_matching_lower_bound, kneser_embedding, kneser_graph, verify_threshold_embedding)

from _brute import clustered_centers, common_points, has_pq_property


def _space(q, n):
    return np.array(list(product(range(q), repeat=n)), dtype=np.int64).reshape(q**n, n)


def test_criterion_1_helly_number(record):
    cases = [(2, 1, 2, 4), (2, 1, 3, 4)] + [(n, 0, q, 2) for n in (1, 2, 3) for q in (2, 3)]
    slowest, wrong = 0.0, []
    for n, t, q, want in cases:
        start = time.perf_counter()
        h = exhaustive_helly(n, t, q).h
        slowest = max(slowest, time.perf_counter() - start)
        if h != want:
            wrong.append((n, t, q, h))
    ok = not wrong and slowest < 60
    record(1, ok, f"{len(cases)} cases, mismatches {wrong}, slowest {slowest:.2f}s")
    assert ok


def test_criterion_2_core_bound(record):
    rng = np.random.default_rng(2)
    bad = 0
    for _ in range(1000):
        q, n, t, m = int(rng.integers(2, 4)), int(rng.integers(1, 7)), int(rng.integers(0, 3)), int(rng.integers(1, 41))
        centers = clustered_centers(rng, q, n, t + 1, m, int(rng.integers(1, 4)))
        fam = BallFamily(Alphabet(q), n, t, tuple(centers))
        core = irredundant_core(fam)
        inball = K.cross_distances(np.asarray(centers, dtype=np.int64), _space(q, n)) <= t
        same = (inball.all(axis=0) == inball[list(core.indices)].all(axis=0)).all()
        if not same or len(core.indices) > 2 ** (t + 1):
            bad += 1
    record(2, bad == 0, f"1000 random families, {bad} violations")
    assert bad == 0


def test_criterion_3_extremal_equality(record):
    start = time.perf_counter()
    bad = []
    for t in range(11):
        v = verify_pair_family(prop21_family(t), "f")
        if not (v.holds and v.weight_sum == 1):
            bad.append(("prop21", t))
        fam = even_weight_family(t)
        v = verify_pair_family(fam, "f")
        if not (v.holds and v.weight_sum == 1 and fam.m == 2 ** (t + 1)):
            bad.append(("even", t))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 5
    record(3, ok, f"t=0..10, failures {bad}, {elapsed:.2f}s")
    assert ok


def test_criterion_4_weighted_fuzz(record):
    rng = np.random.default_rng(4)
    bad = 0
    for mode in ("f", "f-prime"):
        for _ in range(10**4):
            q = int(rng.integers(2, 5)) if mode == "f" else 2
            fam = random_valid_family(rng, mode, q=q, n_max=9, t_max=3)
            v = verify_pair_family(fam, mode)
            if not (v.holds and v.weight_sum <= 1 and fam.m <= 2 ** (fam.t + 1)):
                bad += 1
    record(4, bad == 0, f"2 x 10^4 random valid families, {bad} violations")
    assert bad == 0


def test_criterion_5_code_families(record):
    g = golay_code()
    d = verify_min_distance(g)
    start = time.perf_counter()
    v = verify_pair_family(family_from_code(g, 16), "f-prime")
    elapsed = time.perf_counter() - start
    pairs = comb(g.size, 2)
    golay_ok = g.n == 23 and d == 7 and v.holds and elapsed < 10
    record(5, golay_ok, f"Golay n=23 d={d}, f-prime over {pairs} pairs holds={v.holds} in {elapsed:.2f}s")
    h = family_from_code(hamming_code(3), 4)
    hv = verify_pair_family(h, "f-prime")
    ham_ok = hv.holds and h.m == 16 == 2 ** 7 // 8
    record(5, ham_ok, f"Hamming(3) at t=4: {h.m} pairs, valid={hv.holds}")
    tern = [(t, ternary_family(t).m, verify_pair_family(ternary_family(t), "f-prime").holds) for t in range(7)]
    tern_ok = all(m == 3**t and ok for t, m, ok in tern)
    record(5, tern_ok, "ternary t<=6 gives 3^t valid pairs" if tern_ok else f"ternary {tern}")
    assert golay_ok and ham_ok and tern_ok


@pytest.mark.xfail(strict=True, reason="the [23,12,7] Golay code has 2^12 = 4096 codewords, not 2048")
def test_criterion_5_golay_codeword_count_literal(record):
    size = golay_code().size
    record(5, size == 2048, f"literal codeword count 2048 expected, got {size} (2^23 / V(23,7) = 4096)")
    assert size == 2048


def test_criterion_6_dimension_certificate(record):
    rng = np.random.default_rng(6)
    fams = [prop21_family(1)] + [random_valid_family(rng, "f", q=int(rng.integers(2, 4)), n_max=8, t_max=2, m_max=8)
                                 for _ in range(100)]
    bad = 0
    for fam in fams:
        cert = dimension_certificate(fam)
        total = sum(pair_weight(fam.t, s) * 2**fam.n for s in fam.s)
        if not (cert.holds and total <= 2**fam.n and cert.total == total):
            bad += 1
    record(6, bad == 0, f"{len(fams)} families, {bad} violations")
    assert bad == 0


def test_criterion_7_disjoint_events(record):
    rng = np.random.default_rng(7)
    fams = [prop21_family(t) for t in range(11)]
    fams += [random_valid_family(rng, "f-prime", q=2, n_max=20, t_max=3) for _ in range(100)]
    bad = 0
    for fam in fams:
        cert = disjoint_events_certificate(fam)
        if not (cert.disjoint and cert.probabilities == tuple(pair_weight(fam.t, s) for s in fam.s)):
            bad += 1
    record(7, bad == 0, f"{len(fams)} families (max n={max(f.n for f in fams)}), {bad} violations")
    assert bad == 0


def test_criterion_8_hitting(record):
    rng = np.random.default_rng(8)
    applicable = bad_pairs = 0
    for _ in range(1000):
        t = int(rng.integers(0, 3))
        n, m = int(rng.integers(t + 1, 9)), int(rng.integers(2, 65))
        fam = BallFamily(BINARY, n, t, tuple(clustered_centers(rng, 2, n, t, m, int(rng.integers(1, 4)))))
        rep = fractional_helly_pairs(fam)
        if rep.applicable:
            applicable += 1
            if not rep.hits >= rep.required:
                bad_pairs += 1
    record(8, bad_pairs == 0, f"pairs: {applicable}/1000 applicable, {bad_pairs} below guarantee")

    bad_tuples = checked = 0
    for _ in range(1000):
        t = int(rng.integers(0, 3))
        n, m = int(rng.integers(t + 1, 8)), int(rng.integers(t + 2, 21))
        fam = BallFamily(BINARY, n, t, tuple(clustered_centers(rng, 2, n, t, m, int(rng.integers(1, 4)))))
        rep = fractional_helly_tuples(fam)
        if rep.guarantee == "not-applicable":
            continue
        checked += 1
        ell = rep.details["ell"]
        exact = rep.alpha * (m - ell) / ((t + 2) * candidate_bound(ell, t))
        if rep.guarantee != "holds" or rep.hits < exact or rep.hits < rep.details["required_e_form"]:
            bad_tuples += 1
    record(8, bad_tuples == 0, f"tuples: {checked} exhaustive censuses, {bad_tuples} below guarantee")

    bad_pq = found = 0
    while found < 100:
        t = int(rng.integers(0, 3))
        q = t + 2
        p = q + int(rng.integers(0, 2))
        n, m = int(rng.integers(t + 2, 7)), int(rng.integers(p, p + 5))
        centers = clustered_centers(rng, 2, n, t, m, int(rng.integers(1, p)))
        if common_points(centers, t, 2) or not has_pq_property(centers, t, p, q, 2):
            continue
        found += 1
        fam = BallFamily(BINARY, n, t, tuple(centers))
        rep = pq_hitting(fam, p, q)
        hit = K.cross_distances(np.asarray(centers, dtype=np.int64), np.asarray(rep.points, dtype=np.int64)) <= t
        if not (rep.complete and hit.any(axis=1).all() and len(rep.points) <= rep.size_bound):
            bad_pq += 1
    record(8, bad_pq == 0, f"pq with q=t+2: {found} verified instances, {bad_pq} failures")
    assert bad_pairs == bad_tuples == bad_pq == 0


def test_criterion_9_covering(record):
    bad = calls = 0
    for q in (2, 3):
        A = Alphabet(q)
        for n in range(1, 7):
            P = _space(q, n)
            D = K.cross_distances(P, P)
            w = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
            for t in range(3):
                for delta in range(t + 1):
                    near_b = D <= 2 * t
                    for ai in range(len(P)):
                        a = tuple(int(x) for x in P[ai])
                        for bi in range(len(P)):
                            Y = covering_by_distance(a, tuple(int(x) for x in P[bi]), t, delta, A)
                            calls += 1
                            if len(Y) > covering_size_bound(t, delta, q):
                                bad += 1
                                continue
                            eligible = (D[ai] <= min(D[ai, bi], 2 * t - delta)) & near_b[bi]
                            covered = (D[np.asarray(Y, dtype=np.int64) @ w] <= t).any(axis=0)
                            if (eligible & ~covered).any():
                                bad += 1
    record(9, bad == 0, f"{calls} (a, b, t, delta) instances over q<=3, n<=6, {bad} failures")
    assert bad == 0


def test_criterion_10_prague(record):
    emb_ok = all(verify_threshold_embedding(kneser_embedding(n, k)).valid
                 for n in range(2, 9) for k in (1, 2, 3) if 2 * k <= n)
    emb_ok &= all(verify_threshold_embedding(disjoint_cliques_embedding(m)).valid for m in range(1, 9))
    emb_ok &= all(verify_threshold_embedding(clique_plus_vertex_embedding(n)).valid for n in range(1, 17))
    record(10, emb_ok, "Kneser, disjoint-cliques and clique-plus-vertex embeddings verified")
    rng = np.random.default_rng(10)
    cut_bad = 0
    for _ in range(10**5):
        m, d, q = int(rng.integers(1, 6)), int(rng.integers(1, 8)), int(rng.integers(2, 5))
        c = cut_inequality_check(rng.integers(0, q, (m, d)), rng.integers(0, q, (m, d)))
        cut_bad += not c.holds
    record(10, cut_bad == 0, f"cut inequality on 10^5 random instances, {cut_bad} violations")
    g, _ = kneser_graph(4, 2)
    size = induced_matching_lower_bound(g).size
    record(10, size == 3, f"induced matching of K(4,2) = {size}")
    assert emb_ok and cut_bad == 0 and size == 3


def test_criterion_11_set_sequences(record):
    bad, count = [], 0
    for a, b in ((2, 1), (1, 2), (2, 2)):
        for n in range(1, 6):
            for t in range(0, min(2, n - 1) + 1):
                sys_ = setseq_family(n, t, a, b)
                count += 1
                want = comb(n, t + 1) * (comb(a + b, a) - 2) ** (t + 1)
                if sys_.m != want or sys_.m != setseq_expected_size(n, t, a, b) or not verify_setseq(sys_).holds:
                    bad.append((a, b, n, t))
    record(11, not bad, f"{count} systems, failures {bad}")
    assert not bad


def test_criterion_12_random_projection(record):
    fam = ternary_family(2)
    t = fam.t
    sizes = []
    bad = 0
    for seed in range(10**4):
        pr = random_binary_projection(fam, seed)
        sub = pr.surviving_family()
        sizes.append(sub.m)
        if sub.m and not (verify_pair_family(sub, "f-prime").holds and sub.m <= 2 ** (t + 1)):
            bad += 1
    sizes = np.asarray(sizes, dtype=float)
    expected = 3**t * (2 / 3) ** (t + 1)
    slack = 3 * sizes.std(ddof=1) / np.sqrt(len(sizes))
    mean_ok = sizes.mean() >= expected - slack
    record(12, bad == 0 and mean_ok,
           f"10^4 seeds, {bad} invalid, mean |I| = {sizes.mean():.4f} vs {expected:.4f} - 3 sigma ({slack:.4f})")
    assert bad == 0 and mean_ok
