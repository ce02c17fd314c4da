"""Exception hierarchy.

Graph and word syntax problems derive from :class:`ParseError`; problems with
well-formed input that violates an operation's precondition derive from
:class:`PreconditionError`.  The CLI maps the two families to different exit
codes.
"""

from __future__ import annotations


class TraagError(Exception):
    """Base class for every error raised by this package."""


class ParseError(TraagError, ValueError):
    """Malformed graph file or word text, optionally with a 1-based position."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "")
            message = f"{where}: {message}"
        super().__init__(message)


class BadIdentifier(ParseError):
    pass


class SelfLoop(ParseError):
    pass


class DuplicateEdge(ParseError):
    pass


class DuplicateVertex(ParseError):
    pass


class EmptyGraph(ParseError):
    pass


class PreconditionError(TraagError, ValueError):
    pass


class UnknownVertex(PreconditionError, KeyError):
    # KeyError would otherwise repr() the message
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class BadExponent(PreconditionError):
    pass


class ExponentOverflow(PreconditionError, OverflowError):
    pass


class NotInStar(PreconditionError):
    pass


class NotASource(PreconditionError):
    pass


class ForeignGenerator(PreconditionError):
    pass


class NotAnOrientedEdge(PreconditionError):
    pass


class NoOrientedCycle(PreconditionError):
    pass
