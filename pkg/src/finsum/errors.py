"""Exception types shared across the engine."""


class FinsumError(Exception):
    """Base class for all engine errors."""


class PoleError(FinsumError):
    """A special function was evaluated at a pole (e.g. H at a negative integer)."""


class DivisionByZero(FinsumError):
    """Exact division by an expression that evaluates to zero."""


class EvalTypeError(FinsumError):
    """A value of the wrong kind (e.g. non-integer where an integer is required)."""


class UnboundVariable(FinsumError):
    """An expression was evaluated with a free variable left unbound."""


class DslSyntaxError(FinsumError):
    """Parse failure; carries the byte offset and what was expected there."""

    def __init__(self, message, offset, expected=()):
        super().__init__(f"{message} at offset {offset}" + (f" (expected {', '.join(expected)})" if expected else ""))
        self.offset = offset
        self.expected = tuple(expected)


class ArityError(FinsumError):
    """A DSL function was called with the wrong number of arguments."""


class FormatError(FinsumError):
    """An identity document is malformed."""


class ShapeError(FinsumError):
    """An identity does not have the shape an operation requires."""


class NegativeExponent(FinsumError):
    """A (1-t)/t exponent evaluated to a negative integer during expansion."""
