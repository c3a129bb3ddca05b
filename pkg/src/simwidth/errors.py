"""Exception types shared across the package."""

from __future__ import annotations


class GraphError(ValueError):
    """Invalid argument: unknown vertex, missing edge, malformed input."""


class PreconditionError(ValueError):
    """An operation was called on an input that violates its precondition."""


class NotChordalError(PreconditionError):
    """Raised by chordal-only constructions; carries an induced cycle of length >= 4."""

    def __init__(self, cycle):
        self.cycle = list(cycle)
        super().__init__(f"graph is not chordal; induced cycle {self.cycle}")


class InvalidOrderingError(PreconditionError):
    """Raised when an ordering is not a co-comparability ordering."""

    def __init__(self, witness):
        self.witness = tuple(witness)
        super().__init__(f"not a co-comparability ordering; violating triple {self.witness}")


class DecompositionError(ValueError):
    """Malformed branch decomposition, or one that does not match its graph."""


class SizeLimitError(ValueError):
    """Refusal of an exhaustive computation that would exceed its size limit."""

    def __init__(self, message, required=None):
        self.required = required
        super().__init__(message)


class FormatError(ValueError):
    """Text input that does not follow one of the file formats."""
