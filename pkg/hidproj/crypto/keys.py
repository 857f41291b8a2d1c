"""Key generation for the projector cipher.

The secret key is a rank-deficient basis F (m×r, rank k < r) of the dictionary's
column space. The public key holds two randomized generalized inverses of it,
(Y*_B1, Y*_B2 F). In two-sided mode the same is done for a row basis H*.
"""
from collections import namedtuple

import numpy as np

from hidproj import settings
from hidproj.errors import ParameterError
from hidproj.factorizations import cpqr
from hidproj.linalg.core import CHECK_TOLERANCE, frobenius_norm, pinv, rank_of
from hidproj.linalg.projectors import make_rng, make_x, make_y_star, \
    random_rank_preserving_sketch

# independent random streams of one keygen seed
BASIS_STREAM, B1_STREAM, B2_STREAM = 0, 1, 2
ROW_BASIS_STREAM, D1_STREAM, D2_STREAM = 3, 4, 5

BASES = ('random', 'qr')

ProbeReport = namedtuple('ProbeReport', ['r', 'rank_y1', 'rank_y2f', 'nullity',
                                         'candidate', 'distance'])


class SecretKey(namedtuple('SecretKey', ['f', 'h_star'])):

    __slots__ = ()

    def __new__(cls, f, h_star=None):
        return super().__new__(cls, f, h_star)

    @property
    def mode(self):
        return 'one-sided' if self.h_star is None else 'two-sided'


class PublicKey(namedtuple('PublicKey', ['y1', 'y2f', 'x1', 'hx2', 'r', 'k'])):
    """(Y*_B1, Y*_B2 F), plus (X_D1, H* X_D2) in two-sided mode."""

    __slots__ = ()

    @property
    def mode(self):
        return 'one-sided' if self.x1 is None else 'two-sided'

    @property
    def q(self):
        return None if self.x1 is None else self.x1.shape[1]


def _basis(a, k, width, basis, rng):
    """m×width matrix whose columns span C(a)."""
    if basis == 'random':
        return a @ rng.standard_normal((a.shape[1], width))
    if basis == 'qr':
        q = cpqr(a)[0][:, :k]
        return np.hstack([q, q @ rng.standard_normal((k, width - k))])
    raise ParameterError('ERROR: unknown basis construction {}, expected one of '
                         '{}'.format(basis, BASES))


def keygen(dictionary, r, seed, two_sided=False, q=None, basis='random',
           min_gap=settings.KEY_RANK_GAP):
    """Generate (SecretKey, PublicKey) for `dictionary`.

    Args:
        r: width of the secret basis F, at least k + min_gap.
        two_sided: also build a row basis H* of width `q`.
        basis: 'random' for F = AΩ, 'qr' for k orthonormal columns of C(A) followed
            by r - k random combinations of them.
        min_gap: required rank gap r - k, at least 1.
    """
    k = dictionary.k
    if min_gap < 1:
        raise ParameterError('ERROR: rank gap must be at least 1, got {}'.format(min_gap))
    if r < k + min_gap:
        raise ParameterError('ERROR: key width r={} needs r >= k + {} = {}'.format(
            r, min_gap, k + min_gap))
    if two_sided and (q is None or q < k + min_gap):
        raise ParameterError('ERROR: two-sided keys need q >= k + {} = {}, got {}'.format(
            min_gap, k + min_gap, q))
    a = dictionary.a
    f = _basis(a, k, r, basis, make_rng(seed, BASIS_STREAM))
    h_star = None
    if two_sided:
        h_star = _basis(a.T, k, q, basis, make_rng(seed, ROW_BASIS_STREAM)).T
    sk = SecretKey(f, h_star)
    return sk, derive_public_key(sk, k, seed)


def derive_public_key(sk, k, seed):
    """Draw fresh sketches and build a public key for an existing secret key.

    Any number of public keys can be derived from one secret; they all decrypt
    with it.
    """
    f = sk.f
    r = f.shape[1]
    y1 = make_y_star(random_rank_preserving_sketch(f, k, seed, stream=B1_STREAM), f,
                     k=k)
    y2 = make_y_star(random_rank_preserving_sketch(f, k, seed, stream=B2_STREAM), f,
                     k=k)
    if sk.h_star is None:
        return PublicKey(y1, y2 @ f, None, None, r, k)

    h = sk.h_star.T
    x1 = make_x(random_rank_preserving_sketch(h, k, seed, stream=D1_STREAM),
                sk.h_star, k=k)
    x2 = make_x(random_rank_preserving_sketch(h, k, seed, stream=D2_STREAM),
                sk.h_star, k=k)
    return PublicKey(y1, y2 @ f, x1, sk.h_star @ x2, r, k)


def attack_probe(pk, sk=None):
    """Try to read F back from the public key as (Y*_B1)^+ Y*_B2 F.

    With the secret key at hand the relative distance of that candidate to F is
    reported. Public material of a valid key has rank k < r, so the candidate
    cannot be F.
    """
    rank_y1 = rank_of(pk.y1, CHECK_TOLERANCE).rank
    rank_y2f = rank_of(pk.y2f, CHECK_TOLERANCE).rank
    nullity = pk.r - rank_of(np.eye(pk.r) - pk.y2f, CHECK_TOLERANCE).rank
    candidate = pinv(pk.y1, CHECK_TOLERANCE) @ pk.y2f
    distance = None
    if sk is not None:
        distance = frobenius_norm(candidate - sk.f) / frobenius_norm(sk.f)
    return ProbeReport(pk.r, rank_y1, rank_y2f, nullity, candidate, distance)
