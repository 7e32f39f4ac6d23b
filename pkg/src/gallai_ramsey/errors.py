class GallaiRamseyError(Exception):
    pass


class ParameterError(GallaiRamseyError, ValueError):
    pass


class PreconditionError(GallaiRamseyError):
    """Input violates an operation's precondition (e.g. a non-Gallai coloring)."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class IntegrityError(GallaiRamseyError):
    """A stored or generated object failed its own verification."""


class InternalInvariantError(GallaiRamseyError, AssertionError):
    pass


class ParseError(GallaiRamseyError, ValueError):
    def __init__(self, message, line, column=None):
        where = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{where}: {message}")
        self.line = line
        self.column = column


class ValidationError(GallaiRamseyError, ValueError):
    def __init__(self, message, edge=None):
        super().__init__(message)
        self.edge = edge
