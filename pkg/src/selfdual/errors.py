"""Exception hierarchy.

Every failure raised by a validator carries the name of the invariant it
checked, so that the command line can report it verbatim.
"""

from __future__ import annotations


class SelfDualError(Exception):
    """Base class for all library errors."""


class DimensionError(SelfDualError, ValueError):
    pass


class InvariantError(SelfDualError, ValueError):
    """A named structural invariant does not hold for the given input."""

    def __init__(self, invariant: str, message: str = "", location: str | None = None):
        self.invariant = invariant
        self.message = message or invariant
        self.location = location
        text = f"{invariant}: {self.message}" if message else invariant
        if location:
            text = f"{text} (at {location})"
        super().__init__(text)


class NotNilpotentError(InvariantError):
    def __init__(self, message: str = "matrix is not nilpotent", location: str | None = None):
        super().__init__("nilpotent", message, location)


class NonRationalError(InvariantError):
    """A quantity that must be rational (or Gaussian rational) is not."""

    def __init__(self, message: str, location: str | None = None):
        super().__init__("rational", message, location)
