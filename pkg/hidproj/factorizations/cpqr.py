import numpy as np
from scipy import linalg

from hidproj.errors import ParameterError
from hidproj.linalg.core import DEFAULT_TOLERANCE, rank_of
from .reduced_form import ReducedForm


def cpqr(a):
    """Householder QR with greedy column pivoting, A[:, perm] = Q R."""
    q, r, perm = linalg.qr(np.asarray(a, dtype=np.float64), pivoting=True,
                           mode='economic')
    return q, r, perm


def cpqr_reduced(a, tol=DEFAULT_TOLERANCE):
    """F = Q(:, :k), G = I_k, H* = R(:k, :) Π* with k = rank(A)."""
    a = np.asarray(a, dtype=np.float64)
    k = rank_of(a, tol).rank
    if k == 0:
        raise ParameterError('ERROR: pivoted QR needs a nonzero matrix')
    q, r, perm = cpqr(a)
    h_star = np.zeros((k, a.shape[1]))
    h_star[:, perm] = r[:k]
    return ReducedForm(q[:, :k], np.eye(k), h_star, 'cpqr')
