from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from helly import (Alphabet, BallFamily, BINARY, PairFamily, complement, distance, pair_weight, volume)
from helly.core import Ball, ball_contains
from helly.errors import AlphabetError, EmptyFamilyError, LengthMismatchError
from helly.oracle import _max_clique


def test_alphabet_basics():
    assert BINARY.is_binary and BINARY.is_finite
    ext = Alphabet.extensible()
    assert not ext.is_finite
    assert Alphabet.from_json(Alphabet(3).to_json()) == Alphabet(3)
    assert Alphabet.from_json("extensible") == ext
    assert Alphabet(3).fresh_symbol({0, 1}) == 2
    assert Alphabet(2).fresh_symbol({0, 1}) is None
    with pytest.raises(AlphabetError):
        Alphabet(2).validate((0, 2))


def test_distance_and_complement():
    assert distance((0, 1, 2), (0, 2, 2)) == 1
    assert complement((0, 1, 1)) == (1, 0, 0)
    with pytest.raises(LengthMismatchError):
        distance((0,), (0, 1))


@pytest.mark.parametrize("n,d,v", [(23, 7, 2048), (7, 3, 8), (15, 3, 16), (24, 8, 4096), (3, 2, 2), (4, 4, 8)])
def test_volume_frozen(n, d, v):
    assert volume(n, d) == v


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_volume_is_largest_diameter_set(n):
    # V(n, d) is the largest subset of {0,1}^n of diameter at most d - 1
    pts = list(product((0, 1), repeat=n))
    for d in range(1, n + 1):
        adj = [sum(1 << j for j, q in enumerate(pts) if j != i and distance(p, q) <= d - 1) for i, p in enumerate(pts)]
        assert len(_max_clique(adj, (1 << len(pts)) - 1, len(pts))) == volume(n, d)


@given(st.integers(0, 8), st.integers(1, 8))
def test_pair_weight_at_most_one(t, s):
    w = pair_weight(t, s)
    assert 0 < w <= Fraction(1, 2)
    assert w == Fraction(volume(t + s, s), 2 ** (t + s))


def test_prop21_weights_sum_to_one():
    t = 4
    assert pair_weight(t, 1) * 2 ** (t + 1) == 1


def test_ball_membership():
    b = Ball((0, 0, 0), 1)
    assert ball_contains(b, (0, 1, 0))
    assert not ball_contains(b, (1, 1, 0))


def test_families():
    f = BallFamily.of([(0, 1), (1, 1)], 1)
    assert f.m == 2 and f.n == 2 and f.alphabet == BINARY
    assert f.subfamily([1]).centers == ((1, 1),)
    p = PairFamily.of([((0, 0, 0), (1, 1, 0))], 1)
    assert p.s == (1,) and p.D(0) == (0, 1) and p.d(0) == 1
    with pytest.raises(EmptyFamilyError):
        BallFamily.of([], 1)
