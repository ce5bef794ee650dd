"""Galois groups of irreducible polynomials of degree at most five."""

from .classifier import (
    Certificate,
    ClassifyReport,
    classify,
    classify_cubic,
    classify_int,
    classify_quartic,
    classify_quintic,
    cycle_type_mod_p,
    dedekind_check,
    find_factor,
    is_irreducible,
)
from .errors import (
    ConvergenceError,
    DegreeError,
    GaloisError,
    InvariantViolation,
    NotSquarefreeError,
    NumericAmbiguityError,
    NumericError,
    ParseError,
    PrecisionError,
    ReducibleError,
)
from .groups import GaloisGroup
from .numeric import Tolerances
from .polynomial import IntPoly, RatPoly

__version__ = "0.1.0"
