"""Hidden projectors: randomized generalized inverses built from sketches.

For a column basis F (m×r) and a sketch B of the same shape,

    Y* = (B*F)^+ B*

is a generalized inverse of F (F Y* F = F) as long as B is rank-preserving,
rank(B*F) = rank(F) = k. The row-space counterpart is X = D (H*D)^+. FY* and XH*
are then oblique projectors onto C(F) and C(H).
"""
from collections import namedtuple

import numpy as np

from hidproj import settings
from hidproj.errors import DimensionError, ParameterError, RankPreservationError, \
    SketchRetryError
from hidproj.linalg.core import CHECK_TOLERANCE, DEFAULT_TOLERANCE, _freeze, as_matrix, \
    close_in_norm, frobenius_norm, matmul, pinv, rank_of


RankPreservingCheck = namedtuple('RankPreservingCheck', ['rank_bf', 'rank_hd', 'rank_f',
                                                         'rank_h', 'target_k', 'holds'])


class GeneralizedInversePair(namedtuple('GeneralizedInversePair',
                                        ['y_star', 'x', 'k', 'b', 'd'])):
    """(Y*, X) together with the sketches (B, D) they were built from."""

    __slots__ = ()

    def __new__(cls, y_star, x, k, b, d):
        y_star, x, b, d = (as_matrix(a) for a in (y_star, x, b, d))
        return super().__new__(cls, y_star, x, int(k), b, d)

    def column_projector(self, f):
        """F Y*, the oblique projector onto C(F)."""
        return matmul(f, self.y_star)

    def row_projector(self, h_star):
        """X H*, the oblique projector onto C(H)."""
        return matmul(self.x, h_star)


def make_rng(seed, stream=0):
    """Counter-based generator keyed by (seed, stream).

    Draws depend only on the key, so independent streams can be derived from one
    user seed and evaluated in any order or in parallel.
    """
    if seed < 0 or stream < 0:
        raise ParameterError('ERROR: seeds must be non-negative, got {}/{}'.format(
            seed, stream))
    return np.random.Generator(np.random.Philox(key=(int(seed) << 64) | int(stream)))


def _as_array(a):
    return np.asarray(a, dtype=np.float64)


def make_y_star(b, f, tol=DEFAULT_TOLERANCE, k=None):
    """Y* = (B*F)^+ B* (r×m) for a column basis F and a sketch B, both m×r.

    Args:
        k: target rank. Defaults to rank(F). The pseudoinverse of B*F is truncated
            at k, so rounding noise in the product is never inverted.
    Raises:
        RankPreservationError if rank(B*F) < k.
    """
    b, f = _as_array(b), _as_array(f)
    if b.ndim != 2 or b.shape != f.shape:
        raise DimensionError('ERROR: sketch B has shape {}, basis F has shape {}; '
                             'they must agree'.format(b.shape, f.shape))
    if k is None:
        k = rank_of(f, tol).rank
    bf = b.T @ f
    rank_bf = rank_of(bf, tol).rank
    if rank_bf < k:
        raise RankPreservationError(
            'ERROR: sketch is not rank-preserving, rank(B*F) = {} < {}'.format(
                rank_bf, k), rank=rank_bf, target=k)
    return _freeze(pinv(bf, tol, rank=k) @ b.T)


def make_x(d, h_star, tol=DEFAULT_TOLERANCE, k=None):
    """X = D (H*D)^+ (n×q) for a row basis H* (q×n) and a sketch D (n×q)."""
    d, h_star = _as_array(d), _as_array(h_star)
    if d.ndim != 2 or h_star.ndim != 2 or d.shape != h_star.shape[::-1]:
        raise DimensionError('ERROR: sketch D has shape {}, expected {} for H* of '
                             'shape {}'.format(d.shape, h_star.shape[::-1],
                                               h_star.shape))
    if k is None:
        k = rank_of(h_star, tol).rank
    hd = h_star @ d
    rank_hd = rank_of(hd, tol).rank
    if rank_hd < k:
        raise RankPreservationError(
            'ERROR: sketch is not rank-preserving, rank(H*D) = {} < {}'.format(
                rank_hd, k), rank=rank_hd, target=k)
    return _freeze(d @ pinv(hd, tol, rank=k))


def build_inverse_pair(f, h_star, b, d, tol=DEFAULT_TOLERANCE, k=None):
    """Build (Y*, X) for the factors F, H* from the sketches B, D."""
    y_star = make_y_star(b, f, tol, k)
    x = make_x(d, h_star, tol, k)
    if k is None:
        k = rank_of(f, tol).rank
    return GeneralizedInversePair(y_star, x, k, b, d)


def check_rank_preserving(b, f, h, d, k, tol=DEFAULT_TOLERANCE, strict=False):
    """Fill in the ranks the rank-preserving condition talks about.

    holds is rank(B*F) == rank(H*D) == k; with `strict` it also requires
    rank(F) == rank(H) == k.
    """
    b, f, h, d = _as_array(b), _as_array(f), _as_array(h), _as_array(d)
    if b.shape != f.shape or d.shape != h.shape:
        raise DimensionError('ERROR: sketch shapes {} / {} do not match factor shapes '
                             '{} / {}'.format(b.shape, d.shape, f.shape, h.shape))
    rank_bf = rank_of(b.T @ f, tol).rank
    rank_hd = rank_of(h.T @ d, tol).rank
    rank_f = rank_of(f, tol).rank
    rank_h = rank_of(h, tol).rank
    holds = rank_bf == rank_hd == k
    if strict:
        holds = holds and rank_f == rank_h == k
    return RankPreservingCheck(rank_bf, rank_hd, rank_f, rank_h, k, holds)


def is_idempotent(p, tol=CHECK_TOLERANCE):
    p = _as_array(p)
    if p.ndim != 2 or p.shape[0] != p.shape[1]:
        raise DimensionError('ERROR: idempotence needs a square matrix, got {}'.format(
            p.shape))
    return close_in_norm(p @ p, p, tol, scale=frobenius_norm(p))


def check_projector_equation(y_star, f, h_star, x, tol=CHECK_TOLERANCE):
    """Y*F = I_k = H*X. Holds only in the full-rank regime."""
    y_f = matmul(y_star, f)
    h_x = matmul(h_star, x)
    if y_f.shape != h_x.shape:
        return False
    eye = np.eye(y_f.shape[0])
    return close_in_norm(y_f, eye, tol) and close_in_norm(h_x, eye, tol)


def check_key_equation(a, f, y_star, x, h_star, tol=CHECK_TOLERANCE):
    """(F Y*) A (X H*) = A, relative to ||A||_F."""
    a = _as_array(a)
    reconstruction = matmul(f, y_star, a, x, h_star)
    return close_in_norm(reconstruction, a, tol, scale=frobenius_norm(a))


def random_rank_preserving_sketch(f, k, rng_seed, tol=DEFAULT_TOLERANCE, stream=0,
                                  max_retries=settings.SKETCH_RETRIES):
    """Draw a rank-k sketch B (same shape as F) with rank(B*F) = k.

    The first k columns of B are standard normal, the remaining r - k columns are
    random combinations of them. Draws are repeated until rank preservation holds.

    Raises:
        SketchRetryError if F has rank below k or no draw succeeds.
    """
    f = _as_array(f)
    m, r = f.shape
    if not 1 <= k <= r:
        raise ParameterError('ERROR: sketch rank {} outside [1, {}]'.format(k, r))
    if rank_of(f, tol).rank < k:
        raise SketchRetryError('ERROR: F has rank below {}, no sketch can preserve '
                               'rank {}'.format(k, k), target=k)
    rng = make_rng(rng_seed, stream)
    for attempt in range(max_retries):
        basis = rng.standard_normal((m, k))
        b = np.hstack([basis, basis @ rng.standard_normal((k, r - k))])
        if rank_of(b.T @ f, tol).rank >= k:
            return _freeze(b)
        print('WARNING: sketch draw {} is not rank-preserving, drawing again'.format(
            attempt))
    raise SketchRetryError('ERROR: no rank-preserving sketch found in {} draws'.format(
        max_retries), target=k)
