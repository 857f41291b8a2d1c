import numpy as np
from scipy import linalg

from hidproj.errors import DimensionError, SingularMatrixError
from hidproj.linalg.core import DEFAULT_TOLERANCE
from .reduced_form import ReducedForm


def lu_reduced(a, tol=DEFAULT_TOLERANCE):
    """A = Π* L U with partial pivoting, as F = Π*, G = L, H* = U.

    Raises:
        SingularMatrixError at the first pivot step whose pivot vanishes.
    """
    a = np.asarray(a, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError('ERROR: LU needs a square matrix, got shape {}'.format(
            a.shape))
    p, lower, upper = linalg.lu(a)
    cutoff = tol.bound(np.abs(a).max() * a.shape[0])
    for step, pivot in enumerate(np.diag(upper), start=1):
        if abs(pivot) <= cutoff:
            raise SingularMatrixError('ERROR: matrix is singular, pivot {} of {} '
                                      'vanishes'.format(step, a.shape[0]), step=step)
    return ReducedForm(p, lower, upper, 'lu')
