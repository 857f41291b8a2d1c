"""Solving F G H* = A for the mixing matrix G.

With hidden projectors FY* and XH* the general solution is

    G = Y*AX + W - Y*FWH*X

for arbitrary W, provided C(A) ⊆ C(F) and C(A*) ⊆ C(H). Containment is checked
after the fact through the reconstruction residual.
"""
from collections import namedtuple

import numpy as np

from hidproj import settings
from hidproj.errors import ContainmentError, DimensionError, NoSolutionError
from hidproj.linalg.core import CHECK_TOLERANCE, DEFAULT_TOLERANCE, _freeze, as_matrix, \
    as_vector, frobenius_norm, matmul, pinv, rank_cutoff, rank_of, thin_svd
from hidproj.linalg.projectors import GeneralizedInversePair, make_x, make_y_star, \
    random_rank_preserving_sketch

SolverInputs = namedtuple('SolverInputs', ['a', 'f', 'h_star', 'b', 'd', 'w'])
SolverInputs.__new__.__defaults__ = (None, None, None)

ResidualReport = namedtuple('ResidualReport', ['residual', 'err1', 'err2'])


class FactorizationTriple(namedtuple('FactorizationTriple', ['f', 'g', 'h_star'])):
    """(F, G, H*) whose product F·G·H* is the factorized matrix."""

    __slots__ = ()

    def __new__(cls, f, g, h_star):
        f, g, h_star = (as_matrix(x) for x in (f, g, h_star))
        if f.shape[1] != g.shape[0] or g.shape[1] != h_star.shape[0]:
            raise DimensionError('ERROR: factors of shapes {}, {}, {} do not chain'.format(
                f.shape, g.shape, h_star.shape))
        return super().__new__(cls, f, g, h_star)

    def reconstruct(self):
        return matmul(self.f, self.g, self.h_star)


def relative_residual(a, approximation):
    """||approximation - A||_F / ||A||_F, or the absolute residual when A = 0."""
    a = np.asarray(a, dtype=np.float64)
    if a.shape != np.shape(approximation):
        raise DimensionError('ERROR: cannot compare shapes {} and {}'.format(
            a.shape, np.shape(approximation)))
    residual = frobenius_norm(approximation - a)
    norm = frobenius_norm(a)
    return residual / norm if norm > 0 else residual


def _check_inputs(inputs):
    a, f, h_star = (np.asarray(x, dtype=np.float64)
                    for x in (inputs.a, inputs.f, inputs.h_star))
    if a.ndim != 2 or f.ndim != 2 or h_star.ndim != 2:
        raise DimensionError('ERROR: A, F and H* must all be matrices')
    if f.shape[0] != a.shape[0] or h_star.shape[1] != a.shape[1]:
        raise DimensionError('ERROR: F {} and H* {} do not fit A {}'.format(
            f.shape, h_star.shape, a.shape))
    return a, f, h_star


def sketch_inverse_pair(inputs, tol=DEFAULT_TOLERANCE, seed=0, k=None):
    """Build (Y*, X) for the inputs, drawing any sketch the caller left out.

    Missing sketches are drawn with `random_rank_preserving_sketch`, B from stream 0
    and D from stream 1 of `seed`. Without `k`, Y* targets rank(F) and X rank(H*).
    """
    _, f, h_star = _check_inputs(inputs)
    k_f = rank_of(f, tol).rank if k is None else k
    k_h = rank_of(h_star, tol).rank if k is None else k
    b = inputs.b
    if b is None:
        b = random_rank_preserving_sketch(f, k_f, seed, tol, stream=0)
    d = inputs.d
    if d is None:
        d = random_rank_preserving_sketch(h_star.T, k_h, seed, tol, stream=1)
    y_star = make_y_star(b, f, tol, k_f)
    x = make_x(d, h_star, tol, k_h)
    return GeneralizedInversePair(y_star, x, k_f, b, d)


def _leading_singular_vectors(a, tol):
    u, s, vt = thin_svd(a)
    k = int(np.sum(s > rank_cutoff(s, a.shape, tol)))
    return u[:, :k], vt[:k]


def homogeneous_part(f, h_star, y_star, x, w, tol=DEFAULT_TOLERANCE):
    """G0 = W - Y*FWH*X, which satisfies F G0 H* = 0.

    Y*F and H*X are formed before W enters the product. A second pass subtracts
    P G0 Q, with P and Q the orthogonal projectors onto the row space of F and the
    column space of H*. That term is zero in exact arithmetic when the sketches
    preserve rank; numerically it holds the rounding error of the oblique products.
    """
    f, h_star = np.asarray(f, dtype=np.float64), np.asarray(h_star, dtype=np.float64)
    w = np.asarray(w, dtype=np.float64)
    g0 = w - matmul(matmul(y_star, f), w, matmul(h_star, x))
    _, row_basis = _leading_singular_vectors(f, tol)
    col_basis, _ = _leading_singular_vectors(h_star, tol)
    leak = matmul(row_basis.T, row_basis, g0, col_basis, col_basis.T)
    return _freeze(g0 - leak)


def mixing_from_pair(inputs, pair, max_residual=settings.RESIDUAL_TOLERANCE):
    """G = Y*AX + W - Y*FWH*X for an already built inverse pair.

    Raises:
        ContainmentError if (FY*)A(XH*) misses A by more than `max_residual`
        relative to ||A||_F.
    """
    a, f, h_star = _check_inputs(inputs)
    particular = matmul(pair.y_star, a, pair.x)
    residual = relative_residual(a, matmul(f, particular, h_star))
    if residual > max_residual:
        raise ContainmentError('ERROR: A is not in the span of F and H*, relative '
                               'residual {:.3g}'.format(residual), residual=residual)
    w = inputs.w
    if w is None:
        return FactorizationTriple(f, particular, h_star)
    return FactorizationTriple(f, particular + homogeneous_part(f, h_star, pair.y_star,
                                                                pair.x, w), h_star)


def solve_mixing(inputs, tol=DEFAULT_TOLERANCE, seed=0, k=None,
                 max_residual=settings.RESIDUAL_TOLERANCE):
    """Factorize A = F G H* for the given bases F and H*.

    Args:
        inputs: SolverInputs. B and D default to random rank-preserving sketches
            drawn from `seed`, W defaults to zero (the particular solution Y*AX).
        k: target rank of the sketched inverses, see `sketch_inverse_pair`.
        max_residual: largest accepted relative reconstruction residual.
    Returns:
        FactorizationTriple (F, G, H*)
    """
    pair = sketch_inverse_pair(inputs, tol, seed, k)
    return mixing_from_pair(inputs, pair, max_residual)


def pseudoinverse_mixing(a, f, h_star, max_residual=settings.RESIDUAL_TOLERANCE):
    """G = F^+ A (H*)^+, the orthogonal case B = F, D = H."""
    inputs = SolverInputs(a, f, h_star)
    a, f, h_star = _check_inputs(inputs)
    pair = GeneralizedInversePair(pinv(f), pinv(h_star), rank_of(f).rank, f, h_star.T)
    return mixing_from_pair(inputs, pair, max_residual)


def project_onto_columns(f, b):
    """Orthogonal projection FF^+b of b onto C(F)."""
    f = np.asarray(f, dtype=np.float64)
    b = as_vector(b)
    if f.ndim != 2 or b.shape[0] != f.shape[0]:
        raise DimensionError('ERROR: vector of length {} does not fit F {}'.format(
            b.shape[0], f.shape))
    return _freeze(f @ (pinv(f) @ b))


def solve_vector(f, a, y=None, tol=CHECK_TOLERANCE):
    """General solution g = F^+a + (I - F^+F)y of Fg = a.

    y defaults to zero, which gives the minimum-norm solution.

    Raises:
        NoSolutionError if a lies outside C(F); it carries the residual
        ||FF^+a - a|| and the projection FF^+a.
    """
    f = np.asarray(f, dtype=np.float64)
    a = as_vector(a)
    projection = project_onto_columns(f, a)
    residual = frobenius_norm(projection - a)
    if residual > tol.bound(frobenius_norm(a)):
        raise NoSolutionError('ERROR: right-hand side is not in C(F), residual '
                              '{:.3g}'.format(residual), residual, projection)
    f_plus = pinv(f)
    g = f_plus @ a
    if y is not None:
        y = as_vector(y)
        g = g + y - f_plus @ (f @ y)
    return _freeze(g)


def solve_vector_oblique(f, a, y_star, w=None, tol=CHECK_TOLERANCE):
    """g = Y*a + (I - Y*F)w, the same family written with a generalized inverse."""
    f = np.asarray(f, dtype=np.float64)
    a = as_vector(a)
    g = matmul(y_star, a)
    if w is not None:
        w = as_vector(w)
        g = g + w - matmul(y_star, f, w)
    residual = frobenius_norm(f @ g - a)
    if residual > tol.bound(frobenius_norm(a)):
        raise NoSolutionError('ERROR: right-hand side is not in C(F), residual '
                              '{:.3g}'.format(residual), residual,
                              project_onto_columns(f, a))
    return _freeze(g)


def verify_triple(a, triple, pair=None):
    """Relative residual of F·G·H* against A.

    err1 = ||FY*F - F||_F and err2 = ||H*XH* - H*||_F are filled in when the
    inverse pair is given.
    """
    residual = relative_residual(a, triple.reconstruct())
    if pair is None:
        return ResidualReport(residual, None, None)
    err1 = frobenius_norm(matmul(triple.f, matmul(pair.y_star, triple.f)) - triple.f)
    err2 = frobenius_norm(matmul(matmul(triple.h_star, pair.x), triple.h_star) -
                          triple.h_star)
    return ResidualReport(residual, err1, err2)
