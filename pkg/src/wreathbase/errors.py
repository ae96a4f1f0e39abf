"""Shared exception types."""

from __future__ import annotations


class BudgetExceededError(RuntimeError):
    """An enumeration or search would exceed its configured budget."""


class GroupTooLargeError(BudgetExceededError):
    """Full element enumeration of a permutation group would exceed its cap."""


class TheoremViolationError(AssertionError):
    """An identity that holds mathematically failed on concrete data.

    Raised only when exact computation contradicts a proved statement;
    seeing this exception means a bug, never bad input.
    """


class SearchInconclusiveError(RuntimeError):
    """An exact search ran out of budget before verifying an answer.

    Carries the verified interval [lower, upper] for the quantity being
    searched; the true value is guaranteed to lie in it.
    """

    def __init__(self, lower: int, upper: int, message: str = ""):
        self.lower = lower
        self.upper = upper
        text = message or f"search inconclusive; value lies in [{lower}, {upper}]"
        super().__init__(text)


class PrecisionExhaustedError(RuntimeError):
    """Interval refinement hit its precision cap without separating two values."""
