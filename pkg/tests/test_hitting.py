from fractions import Fraction
from math import comb

import numpy as np
import pytest
from hypothesis import given, strategies as st

from helly import Alphabet, BallFamily, BINARY
from helly.errors import HypothesisViolatedError
from helly.hitting import (E_LOWER, TupleCensus, candidate_bound, covering_by_distance, covering_size_bound,
                           fractional_helly_pairs, fractional_helly_tuples, pairs_required, pq_bound, pq_hitting)

from _brute import clustered_centers, common_points, dist, has_pq_property, space


def test_e_lower_is_below_e():
    assert E_LOWER < Fraction(2718281828459045, 10**15)
    assert E_LOWER > Fraction(2718281828, 10**9)


def test_candidate_bound_small():
    assert candidate_bound(1, 2) == 5
    assert candidate_bound(3, 1) == 4


@pytest.mark.parametrize("t,delta,q,size", [(1, 0, 2, 8), (2, 0, 2, 112), (2, 1, 3, 21), (1, 1, 2, 1)])
def test_covering_size_bound_frozen(t, delta, q, size):
    assert covering_size_bound(t, delta, q) == size


@given(st.integers(2, 3), st.integers(1, 5), st.integers(0, 2), st.data())
def test_covering_hits_eligible_balls(q, n, t, data):
    delta = data.draw(st.integers(0, t))
    a = data.draw(st.tuples(*[st.integers(0, q - 1)] * n))
    b = data.draw(st.tuples(*[st.integers(0, q - 1)] * n))
    Y = covering_by_distance(a, b, t, delta, Alphabet(q))
    assert len(Y) <= covering_size_bound(t, delta, q)
    dab = dist(a, b)
    for p in space(q, n):
        if dist(a, p) <= min(dab, 2 * t - delta) and dist(b, p) <= 2 * t:
            assert any(dist(y, p) <= t for y in Y)


def test_covering_short_circuit():
    assert covering_by_distance((0, 0, 0), (1, 1, 1), 1, 1, BINARY) == [(0, 0, 0)]


def _random_family(rng, q, n, t, m, clusters=2):
    return BallFamily(Alphabet(q), n, t, tuple(clustered_centers(rng, q, n, t, m, clusters)))


@pytest.mark.parametrize("seed", range(30))
def test_pairs_guarantee(seed):
    rng = np.random.default_rng(seed)
    t = int(rng.integers(0, 3))
    fam = _random_family(rng, 2, int(rng.integers(t + 1, 8)), t, int(rng.integers(2, 40)), int(rng.integers(1, 4)))
    rep = fractional_helly_pairs(fam)
    assert rep.holds
    assert rep.hits == sum(dist(rep.point, c) <= t for c in fam.centers)
    if rep.applicable:
        assert rep.hits >= rep.required


def test_pairs_not_applicable():
    fam = BallFamily.of([(0, 0, 0, 0), (1, 1, 1, 1)], 0)
    rep = fractional_helly_pairs(fam)
    assert rep.guarantee == "not-applicable" and rep.hits == 1


def test_pairs_required_formula():
    assert pairs_required(Fraction(1), 24, 1, 2) == Fraction(24, 24 * 4 * 2)


def test_two_clusters_half_hit():
    # two tight clusters far apart: the returned point sits in one full cluster
    a = [(0,) * 8, (1,) + (0,) * 7, (0, 1) + (0,) * 6]
    b = [(1,) * 8, (0,) + (1,) * 7, (1, 0) + (1,) * 6]
    fam = BallFamily.of(a * 3 + b * 2, 1)
    rep = fractional_helly_pairs(fam)
    assert rep.hits >= 9
    assert rep.point in common_points(a, 1, 2)


@pytest.mark.parametrize("seed", range(30))
def test_tuples_guarantee(seed):
    rng = np.random.default_rng(100 + seed)
    t = int(rng.integers(0, 3))
    m = int(rng.integers(t + 2, 16))
    fam = _random_family(rng, 2, int(rng.integers(t + 1, 7)), t, m, int(rng.integers(1, 3)))
    rep = fractional_helly_tuples(fam)
    assert rep.guarantee in ("holds", "not-applicable")
    if rep.applicable:
        ell = rep.details["ell"]
        assert rep.hits >= rep.alpha * (m - ell) / ((t + 2) * candidate_bound(ell, t))
        assert rep.hits >= rep.details["required_e_form"]


def test_tuple_census_matches_brute_force():
    rng = np.random.default_rng(7)
    fam = _random_family(rng, 3, 4, 1, 9, 2)
    census = TupleCensus(fam, 3)
    from itertools import combinations
    want = [S for S in combinations(range(9), 3) if common_points([fam.centers[i] for i in S], 1, 3)]
    assert census.good == want
    assert census.alpha == Fraction(len(want), comb(9, 3))


def test_tuple_census_sampled_flag():
    rng = np.random.default_rng(3)
    fam = _random_family(rng, 2, 6, 1, 12, 2)
    rep = fractional_helly_tuples(fam, limit=10)
    assert rep.guarantee == "sampled"


def test_pq_bound_values():
    # q = t + 2 keeps only the first term
    assert pq_bound(3, 3, 1, 2) == (1 + 3 + 3) * candidate_bound(2, 1)
    assert pq_bound(3, 2, 1, 2) == 4 * candidate_bound(1, 1) + 3 * candidate_bound(1, 1) * 3 * comb(4, 1) * 2


def _pq_instances(seed, count, q_of_t):
    rng = np.random.default_rng(seed)
    found = 0
    while found < count:
        t = int(rng.integers(0, 2))
        q = q_of_t(t)
        p = q + int(rng.integers(0, 2))
        n = int(rng.integers(max(t + 1, 2), 6))
        m = int(rng.integers(p, p + 6))
        centers = clustered_centers(rng, 2, n, t, m, int(rng.integers(1, p)))
        if common_points(centers, t, 2):
            continue     # the shortcut would answer; keep only instances that exercise the construction
        if has_pq_property(centers, t, p, q, 2):
            found += 1
            yield BallFamily(BINARY, n, t, tuple(centers)), p, q


@pytest.mark.parametrize("which", ["q=t+2", "q=2"])
def test_pq_hitting_complete(which):
    q_of_t = (lambda t: t + 2) if which == "q=t+2" else (lambda t: 2)
    for fam, p, q in _pq_instances(5, 15, q_of_t):
        rep = pq_hitting(fam, p, q)
        assert rep.complete
        assert len(rep.points) <= rep.size_bound
        for i, c in enumerate(fam.centers):
            assert dist(rep.points[rep.assignment[i]], c) <= fam.t


def test_pq_engineered_example():
    # t=1: three clusters of pairwise-intersecting balls, every 3 balls contain 2 that meet
    fam = BallFamily.of([(0, 0, 0, 0, 0, 0), (1, 0, 0, 0, 0, 0), (1, 1, 1, 1, 1, 1), (0, 1, 1, 1, 1, 1)], 1)
    assert has_pq_property(fam.centers, 1, 3, 2, 2)
    rep = pq_hitting(fam, 3, 2)
    assert rep.complete and len(rep.points) <= rep.size_bound


def test_pq_detects_violation():
    fam = BallFamily.of([(0, 0, 0, 0, 0, 0), (1, 1, 1, 0, 0, 0), (0, 0, 0, 1, 1, 1)], 0)
    with pytest.raises(HypothesisViolatedError):
        pq_hitting(fam, 2, 2)


def test_pq_common_point_shortcut():
    fam = BallFamily.of([(0, 0, 0), (0, 0, 1)], 1)
    rep = pq_hitting(fam, 2, 2)
    assert len(rep.points) == 1 and rep.details["shortcut"] == "common point"
