"""Alphabets, points, Hamming distance, balls and the binary volume function.

Points are plain tuples of non-negative symbol ids, 0-based internally.
Families carry their alphabet, length and radius and validate on
construction; they are immutable afterwards.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence, Tuple

from .errors import (
    AlphabetError,
    EmptyFamilyError,
    ExtensibleAlphabetError,
    LengthMismatchError,
)

Point = Tuple[int, ...]


@dataclass(frozen=True)
class Alphabet:
    """A finite symbol set ``{0, ..., size-1}``, or ``size=None`` for the
    countably infinite (extensible) alphabet of all non-negative integers."""

    size: int | None = 2

    def __post_init__(self):
        if self.size is not None and self.size < 1:
            raise AlphabetError(f"alphabet size must be >= 1, got {self.size}")

    @classmethod
    def extensible(cls) -> "Alphabet":
        return cls(None)

    @property
    def is_finite(self) -> bool:
        return self.size is not None

    @property
    def is_binary(self) -> bool:
        return self.size == 2

    def require_finite(self, what="this operation"):
        if self.size is None:
            raise ExtensibleAlphabetError(f"{what} enumerates the alphabet; extensible alphabets are not allowed")
        return self.size

    def symbols(self) -> range:
        return range(self.require_finite("symbol enumeration"))

    def contains(self, symbol: int) -> bool:
        return symbol >= 0 and (self.size is None or symbol < self.size)

    def validate(self, p: Sequence[int]) -> Point:
        p = tuple(int(x) for x in p)
        for x in p:
            if not self.contains(x):
                raise AlphabetError(f"symbol {x} outside alphabet of size {self.size}")
        return p

    def fresh_symbol(self, used) -> int | None:
        """Smallest symbol not in ``used``; ``None`` when a finite alphabet is exhausted."""
        used = set(used)
        s = 0
        while s in used:
            s += 1
        if self.size is not None and s >= self.size:
            return None
        return s

    def to_json(self):
        return "extensible" if self.size is None else self.size

    @classmethod
    def from_json(cls, value) -> "Alphabet":
        if value == "extensible":
            return cls.extensible()
        if isinstance(value, bool) or not isinstance(value, int):
            raise AlphabetError(f"alphabet must be an integer or 'extensible', got {value!r}")
        return cls(value)


BINARY = Alphabet(2)


def distance(p: Sequence[int], q: Sequence[int]) -> int:
    """Number of coordinates where ``p`` and ``q`` differ."""
    if len(p) != len(q):
        raise LengthMismatchError(f"length mismatch: {len(p)} vs {len(q)}")
    return sum(1 for x, y in zip(p, q) if x != y)


def complement(p: Sequence[int]) -> Point:
    """Flip every coordinate of a binary point."""
    return tuple(1 - x for x in p)


def support(p: Sequence[int]) -> frozenset:
    return frozenset(k for k, x in enumerate(p) if x)


@lru_cache(maxsize=None)
def volume(n: int, d: int) -> int:
    """Binary volume V(n, d): the Hamming ball of radius (d-1)/2 for odd d, and
    two radius d/2-1 balls with adjacent centres for even d."""
    if not 1 <= d <= n:
        raise ValueError(f"volume needs 1 <= d <= n, got n={n}, d={d}")
    if d % 2:
        return sum(comb(n, i) for i in range((d - 1) // 2 + 1))
    h = d // 2
    return sum(comb(n, i) for i in range(h)) + comb(n - 1, h - 1)


def pair_weight(t: int, s: int) -> Fraction:
    """V(t+s, s) / 2^(t+s), the share one pair with excess ``s`` claims."""
    return Fraction(volume(t + s, s), 2 ** (t + s))


@dataclass(frozen=True)
class Ball:
    center: Point
    radius: int

    def __post_init__(self):
        if self.radius < 0:
            raise ValueError("radius must be non-negative")

    @property
    def n(self) -> int:
        return len(self.center)

    @property
    def whole_space(self) -> bool:
        return self.radius >= len(self.center)


def ball_contains(ball: Ball, p: Sequence[int]) -> bool:
    return distance(ball.center, p) <= ball.radius


def _check_points(alphabet: Alphabet, n: int, points) -> tuple:
    out = []
    for p in points:
        p = alphabet.validate(p)
        if len(p) != n:
            raise LengthMismatchError(f"point of length {len(p)} in a length-{n} family")
        out.append(p)
    return tuple(out)


@dataclass(frozen=True)
class BallFamily:
    """Balls ``B(a_i, t)`` sharing one radius."""

    alphabet: Alphabet
    n: int
    t: int
    centers: Tuple[Point, ...]

    def __post_init__(self):
        if self.n < 0 or self.t < 0:
            raise ValueError("n and t must be non-negative")
        object.__setattr__(self, "centers", _check_points(self.alphabet, self.n, self.centers))

    @classmethod
    def of(cls, centers, t, alphabet=None) -> "BallFamily":
        centers = [tuple(c) for c in centers]
        if not centers:
            raise EmptyFamilyError("cannot infer length from an empty family")
        if alphabet is None:
            alphabet = Alphabet(max(2, 1 + max(max(c) for c in centers)))
        return cls(alphabet, len(centers[0]), t, tuple(centers))

    @property
    def m(self) -> int:
        return len(self.centers)

    @property
    def whole_space(self) -> bool:
        return self.t >= self.n

    def balls(self):
        return [Ball(c, self.t) for c in self.centers]

    def subfamily(self, indices) -> "BallFamily":
        return BallFamily(self.alphabet, self.n, self.t, tuple(self.centers[i] for i in indices))


@dataclass(frozen=True)
class PairFamily:
    """Pairs ``(a_i, b_i)``; the excess ``s_i = dist(a_i, b_i) - t`` is always
    recomputed from the points."""

    alphabet: Alphabet
    n: int
    t: int
    pairs: Tuple[Tuple[Point, Point], ...]
    s: Tuple[int, ...] = field(init=False)

    def __post_init__(self):
        if self.n < 0 or self.t < 0:
            raise ValueError("n and t must be non-negative")
        pairs = []
        for a, b in self.pairs:
            a, b = _check_points(self.alphabet, self.n, (a, b))
            pairs.append((a, b))
        object.__setattr__(self, "pairs", tuple(pairs))
        object.__setattr__(self, "s", tuple(distance(a, b) - self.t for a, b in pairs))

    @classmethod
    def of(cls, pairs, t, alphabet=None) -> "PairFamily":
        pairs = [(tuple(a), tuple(b)) for a, b in pairs]
        if not pairs:
            raise EmptyFamilyError("cannot infer length from an empty family")
        if alphabet is None:
            top = max(max(max(a), max(b)) for a, b in pairs)
            alphabet = Alphabet(max(2, top + 1))
        return cls(alphabet, len(pairs[0][0]), t, tuple(pairs))

    @property
    def m(self) -> int:
        return len(self.pairs)

    @property
    def a(self):
        return [p[0] for p in self.pairs]

    @property
    def b(self):
        return [p[1] for p in self.pairs]

    def D(self, i) -> Tuple[int, ...]:
        """Coordinates where ``a_i`` and ``b_i`` differ (0-based, sorted)."""
        a, b = self.pairs[i]
        return tuple(k for k in range(self.n) if a[k] != b[k])

    def d(self, i) -> int:
        """Largest coordinate of ``D(i)``."""
        return max(self.D(i))

    def subfamily(self, indices) -> "PairFamily":
        return PairFamily(self.alphabet, self.n, self.t, tuple(self.pairs[i] for i in indices))
