from collections import namedtuple

import numpy as np

from hidproj.linalg.core import CHECK_TOLERANCE, DEFAULT_TOLERANCE, pinv, rank_of
from .reduced_form import ReducedForm

CurExactness = namedtuple('CurExactness', ['rank_g', 'rank_a', 'exact'])


def cur(a, sel, tol=DEFAULT_TOLERANCE):
    """F = C = A(:, J), H* = R = A(I, :), G = C^+ A R^+."""
    a = np.asarray(a, dtype=np.float64)
    sel.validate(a.shape)
    c = a[:, list(sel.col_indices)]
    r = a[list(sel.row_indices), :]
    return ReducedForm(c, pinv(c, tol) @ a @ pinv(r, tol), r, 'cur')


def cur_exactness(a, form, tol=DEFAULT_TOLERANCE):
    """CUR reconstructs A exactly iff rank(G) = rank(A)."""
    rank_a = rank_of(a, tol).rank
    rank_g = rank_of(form.g, CHECK_TOLERANCE).rank
    return CurExactness(rank_g, rank_a, rank_g == rank_a)
