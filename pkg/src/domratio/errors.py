"""Exception hierarchy shared by every module."""

from __future__ import annotations


class DomRatioError(Exception):
    """Base class for all library errors."""


class ParseError(DomRatioError, ValueError):
    """Malformed graph text. ``position`` is a byte offset or 1-based line number."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        super().__init__(message)


class DomainError(DomRatioError, ValueError):
    """Input outside the mathematical domain of an operation."""


class SizeError(DomRatioError, ValueError):
    """Input exceeds an implementation cap."""


class PreconditionError(DomRatioError, ValueError):
    """A documented precondition does not hold."""
