"""Exception types shared across the package."""


class JoinDetError(Exception):
    """Base class for all errors raised by joindet."""


class PreconditionError(JoinDetError, ValueError):
    """An operation was called on arguments outside its domain (e.g. order < 2j)."""


class GraphIndexError(JoinDetError, IndexError):
    """A signed vertex index does not resolve into the graph's label range."""


class ParseError(JoinDetError, ValueError):
    """Malformed graph document. Carries the 1-based line and column."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
