"""Exception hierarchy for morse-flowlines.

Library code raises these; only the CLI turns them into messages and
exit codes.
"""

from typing import Any


class MorseFlowError(Exception):
    """Base class for every error raised by the engine."""


class MalformedSimplexError(MorseFlowError, ValueError):
    """A simplex is not a strictly increasing list of non-negative vertex ids."""


class NotInComplexError(MorseFlowError, KeyError):
    """A simplex was looked up in a complex that does not contain it."""

    def __str__(self) -> str:
        # KeyError quotes its argument; keep the plain message
        return str(self.args[0]) if self.args else ""


class NotAFacetError(MorseFlowError, ValueError):
    """Two simplices were expected to form a facet relation but do not."""


class PropertyViolationError(MorseFlowError, ValueError):
    """A face-closure or monotonicity requirement is violated."""


class InvalidMorseFunctionError(MorseFlowError, ValueError):
    """A Morse function has a simplex with two exceptional neighbours on one side."""

    def __init__(self, message: str, witness: Any = None) -> None:
        super().__init__(message)
        self.witness = witness


class InvalidVectorFieldError(MorseFlowError, ValueError):
    """A discrete vector field is not a matching of facet pairs."""


class MalformedPathError(MorseFlowError, ValueError):
    """A path does not have the shape an operation requires."""


class EndpointMismatchError(MalformedPathError):
    """Two paths cannot be composed because their endpoints differ."""


class CannotInsertError(MorseFlowError):
    """Insert was requested on a critical flowline."""


class CannotCancelError(MorseFlowError):
    """No doubled edge traversal exists to cancel."""


class UnboundedEnumerationError(MorseFlowError):
    """Flowline enumeration on a non-gradient field without a length cap."""


class TruncatedEnumerationError(UnboundedEnumerationError):
    """A length cap cut off flowlines that the algorithm still reaches."""


class InvariantViolationError(MorseFlowError, RuntimeError):
    """An internal invariant of the algorithm failed."""


class DimensionMismatchError(MorseFlowError, ValueError):
    """Two differential matrices do not share a chain basis."""


class NonZeroSquareError(MorseFlowError):
    """A composed differential is nonzero; carries the first nonzero entry."""

    def __init__(self, message: str, witness: tuple[Any, Any, int]) -> None:
        super().__init__(message)
        self.witness = witness


class ComplexFileError(MorseFlowError, ValueError):
    """A complex file could not be parsed or is inconsistent."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None) -> None:
        self.message = message
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)
