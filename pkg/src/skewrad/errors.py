"""Exception hierarchy shared by every module."""

from __future__ import annotations

from typing import Any


class SkewradError(Exception):
    """Base class for all library errors."""


class InvalidArgument(SkewradError, ValueError):
    """An operation was called outside its precondition."""


class UnsupportedShape(InvalidArgument):
    """A curve-graph shape is known by name but cannot be built."""


class ResourceLimit(SkewradError, RuntimeError):
    """An enumeration exceeded its configured cap."""

    def __init__(self, what: str, cap: int):
        super().__init__(f"{what} exceeded the configured cap of {cap}")
        self.what = what
        self.cap = cap


class VerificationFailure(SkewradError, AssertionError):
    """A checked claim did not hold; ``witness`` carries the offending data."""

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.witness = witness
