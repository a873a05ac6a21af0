"""Exception hierarchy shared by all modules."""


class HbTraceError(Exception):
    """Base class for all library errors."""


class AmbientMismatchError(HbTraceError):
    """Operands live in different ambient rings, or exponent arity is wrong."""


class DomainError(HbTraceError):
    """Input is outside the mathematical domain of the operation
    (zero/unit ideal, wrong height, non-Cohen-Macaulay, ...)."""


class ResourceCapError(HbTraceError):
    """A configured resource cap (generator count, lattice size) was exceeded."""


class InvariantViolationError(HbTraceError):
    """An internal consistency check failed; indicates a bug, not bad input."""


class ConjecturalTraceError(DomainError):
    """The requested decision would rest on the unproven trace formula.

    Raised instead of returning a boolean when the ideal is neither in two
    variables nor generically Gorenstein.
    """


class ParseError(HbTraceError):
    """Syntax error in an ideal or graph literal."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column
