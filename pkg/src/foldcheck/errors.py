"""Exception types shared across the package."""
from __future__ import annotations


class FoldcheckError(Exception):
    """Base class for all errors raised by this package."""


class ExpressionError(FoldcheckError):
    """Syntax or evaluation error in a manifold expression.

    Carries the 0-based character position of the offending token so callers
    can point at it.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class SchemaError(FoldcheckError):
    """A manifold or bundle document violates the input schema."""


class InvariantViolation(FoldcheckError):
    """A constructed or loaded record fails a named structural invariant."""

    def __init__(self, name: str, detail: str = ""):
        msg = name if not detail else f"{name}: {detail}"
        super().__init__(msg)
        self.name = name


class DimensionMismatch(FoldcheckError):
    """Operands of a combination have incompatible dimensions."""
