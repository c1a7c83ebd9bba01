"""Exception types shared across the package."""

from __future__ import annotations


class PlieError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(PlieError):
    """An argument violates a documented precondition (shape, range, type)."""


class UnsupportedInputError(PlieError):
    """The input is well-formed but outside the supported fragment."""


class SingularMatrixError(PlieError):
    """A matrix that must be invertible over Q is singular.

    Carries the rank actually found during elimination.
    """

    def __init__(self, message: str, rank: int):
        super().__init__(f"{message} (rank {rank})")
        self.rank = rank


class ValidationError(PlieError):
    """A structural validity check failed (Jacobi, cocycle, nondegeneracy, schema).

    ``detail`` holds a machine-readable description, e.g. the defect tensor
    entry that witnesses the failure.
    """

    def __init__(self, message: str, detail: dict | None = None):
        super().__init__(message)
        self.detail = dict(detail or {})


class ParseError(PlieError):
    """Input bytes are not syntactically valid. ``offset`` is a byte position."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset
