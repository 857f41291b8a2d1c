"""The general reduced form A = F G H* and the adapters that need no decomposition."""
from collections import namedtuple

import numpy as np
from scipy import linalg

from hidproj.errors import DimensionError, InvalidSelectionError, ParameterError, \
    SingularMatrixError
from hidproj.linalg.core import CHECK_TOLERANCE, DEFAULT_TOLERANCE, close_in_norm, \
    frobenius_norm, matmul, rank_of
from hidproj.linalg.solver import FactorizationTriple

SOURCES = ('similarity', 'reduced_svd', 'cpqr', 'lu', 'cur', 'outer_product',
           'randomized')


class ReducedForm(namedtuple('ReducedForm', ['f', 'g', 'h_star', 'source'])):
    """A factorization written as F·G·H*, tagged with the method that produced it."""

    __slots__ = ()

    def __new__(cls, f, g, h_star, source):
        if source not in SOURCES:
            raise ParameterError('ERROR: unknown factorization source {}'.format(source))
        triple = FactorizationTriple(f, g, h_star)
        return super().__new__(cls, triple.f, triple.g, triple.h_star, source)

    @property
    def triple(self):
        return FactorizationTriple(self.f, self.g, self.h_star)

    def reconstruct(self):
        return matmul(self.f, self.g, self.h_star)


class ColumnRowSelection(namedtuple('ColumnRowSelection',
                                    ['col_indices', 'row_indices'])):
    """0-based column indices J and row indices I picked from a matrix."""

    __slots__ = ()

    def __new__(cls, col_indices, row_indices):
        return super().__new__(cls, tuple(int(j) for j in col_indices),
                               tuple(int(i) for i in row_indices))

    @classmethod
    def from_one_based(cls, col_indices, row_indices):
        return cls([j - 1 for j in col_indices], [i - 1 for i in row_indices])

    def validate(self, shape):
        for name, indices, size in [('column', self.col_indices, shape[1]),
                                    ('row', self.row_indices, shape[0])]:
            if len(indices) == 0:
                raise InvalidSelectionError('ERROR: empty {} selection'.format(name))
            if len(set(indices)) != len(indices):
                raise InvalidSelectionError('ERROR: repeated {} indices {}'.format(
                    name, indices))
            if min(indices) < 0 or max(indices) >= size:
                raise InvalidSelectionError(
                    'ERROR: {} indices {} out of range for size {}'.format(
                        name, indices, size))


def outer_product_expand(form, tol=CHECK_TOLERANCE):
    """Write A = sum_i g_i f_i h_i* as a list of (weight, column, row) terms.

    Raises:
        DimensionError if G is not diagonal.
    """
    g = form.g
    if g.shape[0] != g.shape[1] or \
            frobenius_norm(g - np.diag(np.diag(g))) > tol.bound(frobenius_norm(g)):
        raise DimensionError('ERROR: outer product expansion needs a diagonal G, got '
                             'shape {}'.format(g.shape))
    return [(float(g[i, i]), form.f[:, i].copy(), form.h_star[i, :].copy())
            for i in range(g.shape[0])]


def _square(name, a):
    a = np.asarray(a, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError('ERROR: {} must be square, got shape {}'.format(
            name, a.shape))
    return a


def _inverse(m_mat, tol):
    if rank_of(m_mat, tol).rank < m_mat.shape[0]:
        raise SingularMatrixError('ERROR: similarity transform M is singular')
    return linalg.inv(m_mat)


def similarity_check(a, m_mat, b, tol=CHECK_TOLERANCE):
    """True iff A = M B M^-1."""
    a, m_mat, b = _square('A', a), _square('M', m_mat), _square('B', b)
    if not a.shape == m_mat.shape == b.shape:
        raise DimensionError('ERROR: shapes {}, {}, {} differ'.format(
            a.shape, m_mat.shape, b.shape))
    m_inv = _inverse(m_mat, DEFAULT_TOLERANCE)
    return close_in_norm(a, matmul(m_mat, b, m_inv), tol)


def similarity_form(m_mat, b):
    m_mat, b = _square('M', m_mat), _square('B', b)
    return ReducedForm(m_mat, b, _inverse(m_mat, DEFAULT_TOLERANCE), 'similarity')


def outer_product_form(b, d):
    """A = BD as F = B, G = I_k, H* = D."""
    b = np.asarray(b, dtype=np.float64)
    return ReducedForm(b, np.eye(b.shape[1]), d, 'outer_product')
