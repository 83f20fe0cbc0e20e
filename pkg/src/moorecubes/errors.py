"""Exception types shared across the package."""
from __future__ import annotations


class MooreError(Exception):
    """Base class for all errors raised by this package."""


class InvalidShape(MooreError):
    """A shape contains a negative or non-finite extent."""


class DimensionMismatch(MooreError):
    """Dimensions, spaces, or coordinate counts do not line up."""


class BadIndex(MooreError):
    """A direction index is outside the range an operator accepts."""


class CompositionUndefined(MooreError):
    """The two cubes do not share the required face.

    reason is "shape" when the face extents disagree, "action" when the
    face values disagree; witness (when present) carries the offending
    evaluation point and both values.
    """

    def __init__(self, reason: str, direction: int, message: str, witness=None):
        super().__init__(message)
        self.reason = reason
        self.direction = direction
        self.witness = witness


class UnknownLaw(MooreError):
    """A law id that is not in the registry."""


class ParseError(MooreError):
    """Syntax error in an expression.

    offset is a byte offset into the source; expected lists the token
    kinds that would have been accepted at that position.
    """

    def __init__(self, message: str, offset: int, expected: tuple[str, ...] = ()):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset
        self.expected = tuple(expected)


class EvalError(MooreError):
    """Runtime error while evaluating an expression.

    span is the (start, end) byte range of the failing subexpression.
    """

    def __init__(self, message: str, span: tuple[int, int] | None = None):
        super().__init__(message)
        self.span = span


class CubeFileError(MooreError):
    """A cube file is malformed or inconsistent with its own metadata."""
