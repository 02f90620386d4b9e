"""Named enumeration limits.

Every exhaustive routine takes its limit from here unless the caller passes
one explicitly. ``HELLY_BUDGET_<NAME>`` in the environment overrides the
default.
"""
import os

from .errors import BudgetExceededError

DEFAULTS = {
    "enumeration": 2**24,       # |X|^n scans (hull membership)
    "oracle": 2**22,            # |X|^n scans in the oracle module
    "codewords": 2**24,
    "tuples": 10**7,            # exhaustive (t+2)-tuple census
    "dimension": 2**16,         # rows of the evaluation matrix
    "events_n": 24,             # length for the 2^n event enumeration
    "setseq": 2**20,
    "family": 2**22,            # pairs produced by constructions
    "matching_exact": 24,       # vertices for exact induced matching
    "helly_points": 2**16,      # |X|^n for the Helly-number search
    "maxf_points": 64,
}


def budget(name, override=None):
    if override is not None:
        return int(override)
    env = os.environ.get(f"HELLY_BUDGET_{name.upper()}")
    if env:
        return int(env)
    return DEFAULTS[name]


def check(name, needed, override=None):
    limit = budget(name, override)
    if needed > limit:
        raise BudgetExceededError(name, needed, limit)
    return limit
