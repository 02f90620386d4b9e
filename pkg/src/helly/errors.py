"""Exception hierarchy shared by every module."""


class HellyError(Exception):
    """Base class for all library errors."""


class LengthMismatchError(HellyError, ValueError):
    pass


class AlphabetError(HellyError, ValueError):
    pass


class ExtensibleAlphabetError(AlphabetError):
    """Raised by operations that must enumerate the alphabet."""


class EmptyFamilyError(HellyError, ValueError):
    pass


class BudgetExceededError(HellyError):
    def __init__(self, name, needed, limit):
        self.name = name
        self.needed = needed
        self.limit = limit
        super().__init__(
            f"budget '{name}' exceeded: need {needed}, limit {limit} "
            f"(override with HELLY_BUDGET_{name.upper()})"
        )


class FormatError(HellyError, ValueError):
    """Malformed input document."""


class HypothesisViolatedError(HellyError):
    """The caller-asserted (p,q) property does not hold for the family."""

    def __init__(self, message, ball=None):
        self.ball = ball
        super().__init__(message)


class InvariantError(HellyError, AssertionError):
    """A proven inequality failed at runtime; signals a bug."""
