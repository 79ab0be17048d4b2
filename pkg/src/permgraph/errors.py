"""Exception types shared across the package."""

from __future__ import annotations


class PermgraphError(Exception):
    """Base class for all errors raised by this package."""


class MalformedInputError(PermgraphError):
    """An argument value is structurally invalid (bad edge, bad permutation, bad token)."""


class ParseError(MalformedInputError):
    """Text input could not be parsed.

    ``offset`` is the 0-based byte offset into the input at which the
    problem was detected, or None when no single position applies.
    """

    def __init__(self, message: str, offset: int | None = None) -> None:
        if offset is not None:
            message = f"{message} (at byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class DomainError(PermgraphError):
    """The input is well formed but outside the domain of the operation."""


class CapacityError(PermgraphError):
    """The input exceeds a size bound of an exact search; raise the bound explicitly."""
