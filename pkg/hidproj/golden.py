"""Hand-checked worked examples, replayed by the demo experiment and the tests.

Each example returns (computed, expected); a check passes when the largest
entrywise difference is within the given absolute tolerance.
"""
from collections import namedtuple

import numpy as np

from hidproj.factorizations import ColumnRowSelection, cpqr_reduced, cur, lu_reduced, \
    reduced_svd, similarity_form
from hidproj.linalg.core import pinv
from hidproj.linalg.projectors import make_rng, make_x, make_y_star
from hidproj.linalg.solver import SolverInputs, solve_mixing

GoldenCheck = namedtuple('GoldenCheck', ['name', 'passed', 'error'])

# 3x3 rank-2 matrix with its first two columns and rows as bases
A = np.array([[0, 1, 1 / 2], [1, 2, 3 / 2], [2, 7, 9 / 2]])
F = A[:, :2]
H_STAR = A[:2, :]
B = np.array([[1, 0], [0, 1], [1, 1]])
D = np.array([[1, 0], [0, 1], [0, 1]])
CUR_MIXING = [[-2, 1], [1, 0]]

# rank-1 example where F = H* = A_LOW
A_LOW = np.array([[0, 1, 1 / 2], [0, 2, 1]])
B_LOW = np.array([[1, 0, 1], [2, 0, 2]])
D_LOW = np.array([[1, 1], [0, 0], [1, 1]])
Y_STAR_LOW = [[0, 0], [4 / 25, 8 / 25], [2 / 25, 4 / 25]]


def _similarity():
    form = similarity_form([[0, 1], [1, 1]], [[2, 4], [2, 3]])
    return form.reconstruct(), [[1, 2], [3, 4]]


def _svd_weights():
    form = reduced_svd([[1, 1], [1, -1], [1, 1]], 2)
    return np.diag(form.g), [2, np.sqrt(2)]


def _lu_lower():
    return lu_reduced([[0, 1, 1], [1, 2, 1], [2, 7, 9]]).g, \
        [[1, 0, 0], [1 / 2, 1, 0], [0, -2 / 3, 1]]


def _lu_upper():
    return lu_reduced([[0, 1, 1], [1, 2, 1], [2, 7, 9]]).h_star, \
        [[2, 7, 9], [0, -3 / 2, -7 / 2], [0, 0, -4 / 3]]


def _cpqr_reconstruction():
    a = np.array([[1, 1], [0, -1], [0, 0]])
    return cpqr_reduced(a).reconstruct(), a


def _cur_mixing():
    return cur(A, ColumnRowSelection.from_one_based([1, 2], [1, 2])).g, CUR_MIXING


def _pinv_column():
    return pinv([[1], [0], [1]]), [[1 / 2, 0, 1 / 2]]


def _y_star():
    return make_y_star(B, F), [[-3 / 2, 4 / 3, -1 / 6], [1 / 2, -1 / 3, 1 / 6]]


def _x():
    return make_x(D, H_STAR), [[-7 / 3, 1], [2 / 3, 0], [2 / 3, 0]]


def _y_star_rank_deficient():
    return make_y_star(B_LOW, A_LOW), Y_STAR_LOW


def _x_rank_deficient():
    return make_x(D_LOW, A_LOW), [[2 / 5, 4 / 5], [0, 0], [2 / 5, 4 / 5]]


def _projector_equation():
    return np.vstack([make_y_star(B, F) @ F, H_STAR @ make_x(D, H_STAR)]), \
        np.vstack([np.eye(2), np.eye(2)])


def _mixing_any_w():
    w = make_rng(0).standard_normal((2, 2))
    return solve_mixing(SolverInputs(A, F, H_STAR, B, D, w)).g, CUR_MIXING


def _mixing_rank_deficient():
    return solve_mixing(SolverInputs(A_LOW, A_LOW, A_LOW, B_LOW, D_LOW)).g, Y_STAR_LOW


GOLDEN_EXAMPLES = [
    ('similarity A = M B M^-1', _similarity),
    ('reduced SVD singular values (2, sqrt 2)', _svd_weights),
    ('LU lower factor', _lu_lower),
    ('LU upper factor', _lu_upper),
    ('pivoted QR reconstruction', _cpqr_reconstruction),
    ('CUR mixing matrix', _cur_mixing),
    ('pseudoinverse of [1; 0; 1]', _pinv_column),
    ('Y* = (B*F)^+ B*', _y_star),
    ('X = D (H*D)^+', _x),
    ('rank-deficient Y*', _y_star_rank_deficient),
    ('rank-deficient X', _x_rank_deficient),
    ('projector equation Y*F = I = H*X', _projector_equation),
    ('mixing matrix for arbitrary W', _mixing_any_w),
    ('rank-deficient mixing matrix', _mixing_rank_deficient),
]


def run_golden_checks(atol=1e-12):
    """Replay every worked example, returning one GoldenCheck per example."""
    results = []
    for name, example in GOLDEN_EXAMPLES:
        computed, expected = example()
        error = float(np.max(np.abs(np.asarray(computed) - np.asarray(expected))))
        results.append(GoldenCheck(name, error <= atol, error))
    return results
