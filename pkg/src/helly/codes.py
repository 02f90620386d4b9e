"""Binary error-correcting codes: trivial, Hamming, Golay and parity extension.

Codewords are stored as 0/1 tuples. Minimum distances are checked exactly
with bit-packed popcounts.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Tuple

import numpy as np

from . import _kernels as K
from .budgets import check as check_budget
from .core import Point
from .errors import FormatError

# x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1, bit i = coefficient of x^i
GOLAY_GENERATOR = 0xC75


@dataclass(frozen=True)
class Code:
    n: int
    claimed_d: int
    codewords: Tuple[Point, ...]
    name: str = "code"

    def __post_init__(self):
        words = tuple(tuple(int(x) for x in w) for w in self.codewords)
        for w in words:
            if len(w) != self.n:
                raise ValueError(f"codeword of length {len(w)} in a length-{self.n} code")
            if any(x not in (0, 1) for x in w):
                raise ValueError("codewords must be binary")
        if len(set(words)) != len(words):
            raise ValueError("codewords must be distinct")
        object.__setattr__(self, "codewords", words)

    @property
    def size(self) -> int:
        return len(self.codewords)

    def packed(self) -> np.ndarray:
        return K.pack_bits(self.codewords)

    def to_doc(self) -> dict:
        return {
            "version": 1,
            "name": self.name,
            "n": self.n,
            "claimed_d": self.claimed_d,
            "size": self.size,
            "codewords": ["".join(map(str, w)) for w in self.codewords],
        }

    @classmethod
    def from_doc(cls, doc) -> "Code":
        try:
            n = int(doc["n"])
            words = []
            for w in doc["codewords"]:
                if isinstance(w, str):
                    if len(w) != n or set(w) - {"0", "1"}:
                        raise FormatError(f"codeword {w!r} is not a length-{n} bit string")
                    words.append(tuple(int(c) for c in w))
                else:
                    words.append(tuple(w))
            return cls(n, int(doc.get("claimed_d", 1)), tuple(words), doc.get("name", "user"))
        except (KeyError, TypeError) as exc:
            raise FormatError(f"bad code document: {exc}") from None


def trivial_code(k: int) -> Code:
    """All ``2^k`` strings of length ``k``."""
    if not 1 <= k <= 24:
        raise ValueError(f"trivial code length must be in 1..24, got {k}")
    check_budget("codewords", 2**k)
    return Code(k, 1, tuple(product((0, 1), repeat=k)), f"trivial({k})")


def _syndrome_matrix(r: int) -> np.ndarray:
    n = 2**r - 1
    # column j (1-based) is the binary expansion of j
    return np.array([[(j >> (r - 1 - i)) & 1 for j in range(1, n + 1)] for i in range(r)], dtype=np.int64)


def hamming_code(r: int) -> Code:
    """The ``[2^r - 1, 2^r - 1 - r, 3]`` code: kernel of the parity-check
    matrix whose columns are ``1..2^r-1`` in binary."""
    if r < 2:
        raise ValueError(f"Hamming code needs r >= 2, got {r}")
    n = 2**r - 1
    kdim = n - r
    check_budget("codewords", 2**kdim)
    # systematic form: positions that are powers of two carry the checks
    checks = [2**i - 1 for i in range(r)]
    data = [j for j in range(n) if j not in checks]
    words = []
    for msg in product((0, 1), repeat=kdim):
        w = [0] * n
        for pos, bit in zip(data, msg):
            w[pos] = bit
        syn = 0
        for j in range(n):
            if w[j]:
                syn ^= j + 1
        for i in range(r):
            if (syn >> i) & 1:
                w[2**i - 1] = 1
        words.append(tuple(w))
    return Code(n, 3, tuple(words), f"hamming({r})")


def syndrome(word, r: int) -> int:
    """XOR of the (1-based) positions of the ones; zero exactly on Hamming codewords."""
    s = 0
    for j, x in enumerate(word):
        if x:
            s ^= j + 1
    return s


def _poly_mul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def golay_code() -> Code:
    """The binary ``[23, 12, 7]`` Golay code: all multiples of
    :data:`GOLAY_GENERATOR` by message polynomials of degree < 12."""
    words = []
    for msg in range(2**12):
        c = _poly_mul(msg, GOLAY_GENERATOR)
        words.append(tuple((c >> i) & 1 for i in range(23)))
    return Code(23, 7, tuple(words), "golay")


def extend_parity(code: Code) -> Code:
    """Append the XOR of each codeword's bits."""
    words = tuple(w + (sum(w) & 1,) for w in code.codewords)
    d = code.claimed_d + 1 if code.claimed_d % 2 else code.claimed_d
    return Code(code.n + 1, d, words, f"{code.name}+parity")


def verify_min_distance(code: Code) -> int:
    if code.size < 2:
        raise ValueError("minimum distance needs at least two codewords")
    return int(K.packed_min_distance(code.packed()))
