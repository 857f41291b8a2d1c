"""Exceptions raised by hidproj.

Everything derives from HiddenProjectorError, so callers that only care about
success or failure can catch that one class. Numerical failures additionally
derive from numpy.linalg.LinAlgError.
"""
from numpy.linalg import LinAlgError


class HiddenProjectorError(Exception):
    pass


class DimensionError(HiddenProjectorError, ValueError):
    """Operand shapes do not chain."""


class ParameterError(HiddenProjectorError, ValueError):
    """A parameter is outside its admissible range."""


class InvalidSelectionError(HiddenProjectorError, IndexError):
    """Column or row indices are out of range or repeated."""


class FormatError(HiddenProjectorError, ValueError):
    """A matrix, key or ciphertext file could not be parsed."""


class RankPreservationError(HiddenProjectorError, LinAlgError):
    """rank(B*F) (or rank(H*D)) fell below the target rank."""

    def __init__(self, message, rank=None, target=None):
        super().__init__(message)
        self.rank = rank
        self.target = target


class SketchRetryError(RankPreservationError):
    """No rank-preserving random draw was found within the retry limit."""


class ContainmentError(HiddenProjectorError, LinAlgError):
    """C(A) is not contained in C(F), or C(A*) not in C(H)."""

    def __init__(self, message, residual):
        super().__init__(message)
        self.residual = residual


class NoSolutionError(HiddenProjectorError, LinAlgError):
    """The right-hand side lies outside the column space."""

    def __init__(self, message, residual, projection):
        super().__init__(message)
        self.residual = residual
        self.projection = projection


class SingularMatrixError(HiddenProjectorError, LinAlgError):

    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step


class DecodeError(HiddenProjectorError, ValueError):
    """A decrypted vector is not within the decode margin of a unique column."""

    def __init__(self, message, distance=None):
        super().__init__(message)
        self.distance = distance
