"""Dense real matrix foundation.

A Matrix is a 2-D float64 numpy array with finite entries. Arrays returned from
`hidproj.linalg` are read-only so values can be shared freely between threads.
All functions here are pure: they never modify their arguments.
"""
from collections import namedtuple

import numpy as np

from hidproj import settings
from hidproj.errors import DimensionError, ParameterError


class Tolerance(namedtuple('Tolerance', ['absolute', 'relative'])):
    """Cutoff max(absolute, relative * scale); what `scale` is depends on the use."""

    __slots__ = ()

    def __new__(cls, absolute, relative):
        if not absolute > 0 or not relative > 0:
            raise ParameterError('ERROR: tolerances must be strictly positive, got '
                                 'absolute={} relative={}'.format(absolute, relative))
        return super().__new__(cls, float(absolute), float(relative))

    def bound(self, scale):
        return max(self.absolute, self.relative * scale)


DEFAULT_TOLERANCE = Tolerance(settings.RANK_ABSOLUTE, settings.RANK_RELATIVE)
CHECK_TOLERANCE = Tolerance(settings.CHECK_ABSOLUTE, settings.CHECK_RELATIVE)

RankReport = namedtuple('RankReport', ['rank', 'singular_values', 'tolerance'])

PenroseChecks = namedtuple('PenroseChecks', ['reproduces_a', 'reproduces_aplus',
                                             'a_aplus_symmetric',
                                             'aplus_a_symmetric'])


def _freeze(array):
    if isinstance(array, np.ndarray):
        array.setflags(write=False)
    return array


def as_matrix(data):
    """Copy `data` into a read-only Matrix, rejecting empty or non-finite input."""
    matrix = np.array(data, dtype=np.float64)
    if matrix.ndim != 2:
        raise DimensionError('ERROR: expected a 2-D matrix, got {} dimensions'.format(
            matrix.ndim))
    if matrix.size == 0:
        raise DimensionError('ERROR: matrix of shape {} is empty'.format(matrix.shape))
    if not np.all(np.isfinite(matrix)):
        raise ParameterError('ERROR: matrix contains NaN or Inf entries')
    return _freeze(matrix)


def as_vector(data):
    """Copy `data` into a read-only 1-D float64 array. An n×1 column is flattened."""
    vector = np.array(data, dtype=np.float64)
    if vector.ndim == 2 and vector.shape[1] == 1:
        vector = vector[:, 0]
    if vector.ndim != 1:
        raise DimensionError('ERROR: expected a vector, got shape {}'.format(
            vector.shape))
    if not np.all(np.isfinite(vector)):
        raise ParameterError('ERROR: vector contains NaN or Inf entries')
    return _freeze(vector)


def thin_svd(a):
    """The SVD every rank decision in the package is based on."""
    u, s, vt = np.linalg.svd(np.asarray(a, dtype=np.float64), full_matrices=False)
    return _freeze(u), _freeze(s), _freeze(vt)


def rank_cutoff(singular_values, shape, tol=DEFAULT_TOLERANCE):
    sigma_max = singular_values[0] if len(singular_values) else 0.0
    return tol.bound(sigma_max * max(shape))


def rank_of(a, tol=DEFAULT_TOLERANCE):
    """Numerical rank: count of singular values strictly above the cutoff."""
    a = np.asarray(a, dtype=np.float64)
    if a.size == 0:
        raise DimensionError('ERROR: rank of an empty matrix is undefined')
    _, s, _ = thin_svd(a)
    cutoff = rank_cutoff(s, a.shape, tol)
    return RankReport(int(np.sum(s > cutoff)), s, cutoff)


def pinv(a, tol=DEFAULT_TOLERANCE, rank=None):
    """Moore-Penrose pseudoinverse through the SVD.

    Singular values at or below the rank cutoff are treated as zero. If `rank` is
    given, only the leading `rank` singular triplets are inverted.
    """
    a = np.asarray(a, dtype=np.float64)
    if a.size == 0:
        raise DimensionError('ERROR: pseudoinverse of an empty matrix is undefined')
    u, s, vt = thin_svd(a)
    keep = s > rank_cutoff(s, a.shape, tol)
    if rank is not None:
        keep[rank:] = False
    s_inv = np.zeros_like(s)
    s_inv[keep] = 1.0 / s[keep]
    return _freeze((vt.T * s_inv) @ u.T)


def frobenius_norm(a):
    return float(np.linalg.norm(np.asarray(a, dtype=np.float64)))


def close_in_norm(x, y, tol=CHECK_TOLERANCE, scale=None):
    """||x - y||_F <= max(tol.absolute, tol.relative * scale).

    `scale` defaults to the larger Frobenius norm of the two operands.
    """
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.shape != y.shape:
        raise DimensionError('ERROR: cannot compare shapes {} and {}'.format(
            x.shape, y.shape))
    if scale is None:
        scale = max(frobenius_norm(x), frobenius_norm(y))
    return frobenius_norm(x - y) <= tol.bound(scale)


def check_penrose(a, aplus, tol=CHECK_TOLERANCE):
    """Check the four Penrose equations for the candidate pseudoinverse `aplus`."""
    a = np.asarray(a, dtype=np.float64)
    aplus = np.asarray(aplus, dtype=np.float64)
    if a.ndim != 2 or aplus.shape != a.shape[::-1]:
        raise DimensionError('ERROR: candidate inverse has shape {}, expected {}'.format(
            aplus.shape, a.shape[::-1]))
    a_aplus = a @ aplus
    aplus_a = aplus @ a
    return PenroseChecks(close_in_norm(a_aplus @ a, a, tol),
                         close_in_norm(aplus_a @ aplus, aplus, tol),
                         close_in_norm(a_aplus.T, a_aplus, tol),
                         close_in_norm(aplus_a.T, aplus_a, tol))


def matmul(*operands):
    """Chained product with an explicit shape check."""
    if len(operands) == 0:
        raise DimensionError('ERROR: matmul needs at least one operand')
    operands = [np.asarray(op, dtype=np.float64) for op in operands]
    for left, right in zip(operands[:-1], operands[1:]):
        if left.shape[-1] != right.shape[0]:
            raise DimensionError('ERROR: cannot multiply shapes {} and {}'.format(
                left.shape, right.shape))
    if len(operands) == 1:
        return _freeze(operands[0].copy())
    if len(operands) == 2:
        return _freeze(operands[0] @ operands[1])
    return _freeze(np.linalg.multi_dot(operands))


def transpose(a):
    return _freeze(np.asarray(a, dtype=np.float64).T.copy())


def sub(a, b):
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape:
        raise DimensionError('ERROR: cannot subtract shapes {} and {}'.format(
            a.shape, b.shape))
    return _freeze(a - b)


def identity(k):
    if k < 1:
        raise DimensionError('ERROR: identity size must be positive, got {}'.format(k))
    return _freeze(np.eye(k))
