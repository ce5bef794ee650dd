"""Exception hierarchy shared by the library and the CLI."""


class GaloisError(Exception):
    """Base class for every error raised by galoiscalc."""


class DegreeError(GaloisError, ValueError):
    """Polynomial degree outside the supported range 1..5."""


class ReducibleError(GaloisError):
    """The input polynomial factors over Q.

    ``factor`` is a monic integral factor of the normalized polynomial.
    """

    def __init__(self, poly, factor):
        self.poly = poly
        self.factor = factor
        super().__init__(f"{poly} is reducible: it has the factor {factor}")


class NotSquarefreeError(GaloisError):
    """Discriminant vanished; an irreducible polynomial cannot do that."""


class NumericError(GaloisError):
    """Base for failures of the floating-point phase."""


class ConvergenceError(NumericError):
    pass


class PrecisionError(NumericError):
    pass


class NumericAmbiguityError(NumericError):
    """Tolerances could not separate root orderings or decide integrality."""


class InvariantViolation(GaloisError):
    """An internal cross-check failed (e.g. two routes disagree)."""


class ParseError(GaloisError, ValueError):
    def __init__(self, message: str, text: str = "", pos: int | None = None):
        self.text = text
        self.pos = pos
        if pos is not None:
            message = f"{message} at position {pos}: {text!r}"
        super().__init__(message)
