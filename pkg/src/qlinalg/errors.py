"""Exception hierarchy.

Validation problems derive from ``ValueError``; numerical breakdowns derive
from :class:`NumericalError`. The CLI maps the first family to exit code 1
and the second to exit code 2.
"""


class QuaternionError(Exception):
    pass


class ParseError(QuaternionError, ValueError):
    pass


class ShapeMismatch(QuaternionError, ValueError):
    pass


class DegenerateInput(QuaternionError, ValueError):
    pass


class InvalidAxes(QuaternionError, ValueError):
    pass


class NotInEmbeddingImage(QuaternionError, ValueError):
    pass


class EntriesOutsideSubfield(QuaternionError, ValueError):
    pass


class DivisionByZero(QuaternionError, ZeroDivisionError):
    pass


class NumericalError(QuaternionError, ArithmeticError):
    pass


class SingularMatrix(NumericalError):
    pass


class DefectiveOrAmbiguous(NumericalError):
    pass


class NoConvergence(NumericalError):
    """Raised when QR iteration exceeds its budget.

    ``partial`` carries the :class:`~qlinalg.complex_engine.EigenResult`
    computed so far, with per-value convergence flags.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
