"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class SierpinskiError(ValueError):
    """Base class for all errors raised by gsierpinski."""


class MalformedInput(SierpinskiError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SelfLoop(MalformedInput):
    pass


class DuplicateEdge(MalformedInput):
    pass


class LabelOutOfRange(MalformedInput):
    pass


class OrderTooSmall(MalformedInput):
    pass


class NegativeExponent(SierpinskiError):
    pass


class LengthMismatch(SierpinskiError):
    pass


class LetterOutOfRange(SierpinskiError):
    pass


class RankOutOfRange(SierpinskiError):
    pass


class CapExceeded(SierpinskiError):
    """Explicit enumeration would exceed the configured vertex cap."""


class NotATree(SierpinskiError):
    pass


class InternalInconsistency(SierpinskiError):
    """Two independent computations of the same quantity disagree."""
