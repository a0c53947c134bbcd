"""Shared exception types."""


class ShapeError(ValueError):
    """Operands live in different rings or have mismatched dimensions."""


class NotInvertible(ZeroDivisionError):
    """A value that must be invertible is zero (or singular)."""


class ResourceExceeded(RuntimeError):
    """A configured degree or effort cap was hit before an answer was found."""


class InvalidInput(ValueError):
    """An input identity or certificate fails its defining equation."""


class InternalError(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""


class ParseError(ValueError):
    """Syntax error in a polynomial expression or problem file."""

    def __init__(self, message, line, column):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column
