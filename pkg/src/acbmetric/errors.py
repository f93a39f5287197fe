"""Exception types raised by the engine."""


class ACBError(Exception):
    """Base class for all engine errors."""


class SingularMetric(ACBError):
    """A metric (or other matrix that must be inverted) is degenerate."""


class DimensionMismatch(ACBError):
    """Tensor shapes of the inputs do not agree."""


class NotApplicable(ACBError):
    """An analysis was requested outside the hypotheses it needs."""


class DegenerateCase(ACBError):
    """A closed formula is undefined for the given constants."""


class ParseError(ACBError):
    """Malformed manifold description text."""

    def __init__(self, message, line=None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)


class ValidationError(ACBError):
    """A manifold description is well formed but violates an invariant."""
