"""Exception hierarchy shared by every module of the package."""


class AlgTensorError(Exception):
    """Base class for all errors raised by algtensor."""


class NotMonic(AlgTensorError, ValueError):
    pass


class Reducible(AlgTensorError, ValueError):
    """The proposed minimal polynomial factors over Q.

    ``factor`` holds one nontrivial monic factor (least-degree-first
    coefficients) as a witness.
    """

    def __init__(self, message, factor):
        super().__init__(message)
        self.factor = factor


class DegreeCapExceeded(AlgTensorError, ValueError):
    pass


class FieldMismatch(AlgTensorError, ValueError):
    pass


class DivisionByZero(AlgTensorError, ZeroDivisionError):
    pass


class OrderMismatch(AlgTensorError, ValueError):
    pass


class ShapeMismatch(AlgTensorError, ValueError):
    pass


class BadModeSet(AlgTensorError, ValueError):
    pass


class SizeCapExceeded(AlgTensorError, ValueError):
    pass


class ParseError(AlgTensorError, ValueError):
    """Malformed input. ``line`` and ``where`` locate the problem when known."""

    def __init__(self, message, line=None, where=None):
        loc = []
        if line is not None:
            loc.append(f"line {line}")
        if where:
            loc.append(where)
        super().__init__(f"{message} ({', '.join(loc)})" if loc else message)
        self.message = message
        self.line = line
        self.where = where


class FieldError(ParseError):
    """An entry value does not lie in the declared number field."""


class TensorIndexError(AlgTensorError, IndexError):
    """Out-of-range or duplicate index in a tensor file."""
