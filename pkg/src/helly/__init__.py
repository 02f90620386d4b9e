"""Helly-type computations for Hamming balls.

Exact intersection tests and Helly cores, constructive hitting sets,
extremal pair families built from error-correcting codes, certificate
checkers for the weighted volume inequality, threshold embeddings of
graphs, and brute-force oracles for small parameters.
"""
from .core import (
    BINARY,
    Alphabet,
    Ball,
    BallFamily,
    PairFamily,
    ball_contains,
    complement,
    distance,
    pair_weight,
    volume,
)
from .errors import (
    AlphabetError,
    BudgetExceededError,
    EmptyFamilyError,
    ExtensibleAlphabetError,
    FormatError,
    HellyError,
    HypothesisViolatedError,
    InvariantError,
    LengthMismatchError,
)

__version__ = "0.1.0"

__all__ = [
    "BINARY",
    "Alphabet",
    "Ball",
    "BallFamily",
    "PairFamily",
    "ball_contains",
    "complement",
    "distance",
    "pair_weight",
    "volume",
    "AlphabetError",
    "BudgetExceededError",
    "EmptyFamilyError",
    "ExtensibleAlphabetError",
    "FormatError",
    "HellyError",
    "HypothesisViolatedError",
    "InvariantError",
    "LengthMismatchError",
]
