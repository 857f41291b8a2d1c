import numpy as np

from hidproj.errors import ParameterError
from hidproj.linalg.core import DEFAULT_TOLERANCE, rank_cutoff, thin_svd
from .reduced_form import ReducedForm


def reduced_svd(a, k, tol=DEFAULT_TOLERANCE):
    """F = U_k, G = S_k, H* = V_k*.

    Signs are fixed so that the first nonzero entry of every column of U_k is
    positive; the flip is absorbed into the matching row of V_k*.
    """
    a = np.asarray(a, dtype=np.float64)
    u, s, vt = thin_svd(a)
    rank = int(np.sum(s > rank_cutoff(s, a.shape, tol)))
    if not 1 <= k <= rank:
        raise ParameterError('ERROR: SVD rank {} outside [1, {}]'.format(k, rank))
    u, s, vt = u[:, :k].copy(), s[:k], vt[:k].copy()
    for j in range(k):
        nonzero = np.flatnonzero(np.abs(u[:, j]) > tol.absolute)
        if len(nonzero) and u[nonzero[0], j] < 0:
            u[:, j] *= -1
            vt[j] *= -1
    return ReducedForm(u, np.diag(s), vt, 'reduced_svd')
