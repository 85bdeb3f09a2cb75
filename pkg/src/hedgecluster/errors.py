"""Exception hierarchy shared by every module."""

from __future__ import annotations


class HedgeError(Exception):
    """Base class for all errors raised by this package."""


class InputError(HedgeError, ValueError):
    """Malformed or inconsistent input.

    ``line`` and ``column`` are 1-based positions into the offending text (or
    the offending item of a list argument) when known.
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class StructuralError(HedgeError):
    """The instance violates a structural precondition of an algorithm.

    ``witness`` carries the offending object (a triangle, a cycle, a pair of
    list vertices, ...) when one is available.
    """

    def __init__(self, message: str, witness=None):
        self.witness = witness
        super().__init__(message)


class RefusalError(StructuralError):
    """An exponential routine refused to run past its size guard."""


class InvariantViolation(HedgeError, AssertionError):
    """A structural property that must hold by construction was found broken."""
