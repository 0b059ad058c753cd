"""Exception types shared across the package."""


class ValidationError(ValueError):
    """An input violates a documented invariant or argument contract."""


class ParseError(ValidationError):
    """A document could not be parsed; carries line and column when known."""

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column


class PreconditionError(Exception):
    """A hypothesis of a derived construction fails for the given input.

    Distinct from ValidationError: the input is well formed, it just does
    not satisfy the hypotheses of the construction being applied.
    """

    def __init__(self, message, reasons=()):
        super().__init__(message)
        self.reasons = tuple(reasons)


class InternalInvariantError(RuntimeError):
    """Two computations that must agree disagreed: a library defect."""
