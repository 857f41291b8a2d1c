"""Randomized encryption with hidden projectors.

One-sided:  c = Y*_B1 m + (I - Y*_B2 F) w,        m = F c
Two-sided:  C = Y*_B1 M X_D1 + W - Y*_B2 F W H* X_D2,  M = F C H*

The noise w (or W) is drawn from the encryption seed and cancels on decryption,
since F Y*_B2 F = F.
"""
import numpy as np

from hidproj import settings
from hidproj.errors import ContainmentError, DimensionError, ParameterError
from hidproj.linalg.core import matmul
from hidproj.linalg.projectors import make_rng
from hidproj.linalg.solver import relative_residual


class Ciphertext:
    """Encrypted payload, r×L for L message columns or r×q in two-sided mode.

    `nonce_seed` records which seed drew the noise. It is kept for diagnostics and
    ignored when comparing ciphertexts.
    """

    __hash__ = None

    def __init__(self, payload, nonce_seed=None, length=None):
        self.payload = np.asarray(payload, dtype=np.float64)
        if not np.all(np.isfinite(self.payload)):
            raise ParameterError('ERROR: ciphertext contains NaN or Inf entries')
        self.nonce_seed = nonce_seed
        if length is None:
            length = 1 if self.payload.ndim == 1 else self.payload.shape[1]
        self.length = length

    def __eq__(self, other):
        if not isinstance(other, Ciphertext):
            return NotImplemented
        return self.payload.shape == other.payload.shape and \
            np.array_equal(self.payload, other.payload)

    def __repr__(self):
        return 'Ciphertext(shape={}, length={})'.format(self.payload.shape, self.length)


def _noise(seed, shape, zero_noise):
    if zero_noise:
        return np.zeros(shape)
    return make_rng(seed).standard_normal(shape)


def encrypt(pk, message, seed, zero_noise=False):
    """Encrypt a message vector (length m) or block (m×L, one column per symbol).

    With `zero_noise` the homogeneous term is dropped and c = Y*_B1 m.
    """
    message = np.asarray(message, dtype=np.float64)
    if message.ndim not in (1, 2) or message.shape[0] != pk.y1.shape[1]:
        raise DimensionError('ERROR: message of shape {} does not fit a key for {} '
                             'rows'.format(message.shape, pk.y1.shape[1]))
    w = _noise(seed, (pk.r,) + message.shape[1:], zero_noise)
    payload = pk.y1 @ message + w - pk.y2f @ w
    return Ciphertext(payload, None if zero_noise else seed)


def decrypt(sk, ciphertext):
    return matmul(sk.f, ciphertext.payload)


def encrypt2(pk, message, seed, zero_noise=False):
    """Two-sided encryption of an m×n message whose row and column spaces lie in
    those of the dictionary."""
    if pk.x1 is None:
        raise ParameterError('ERROR: two-sided encryption needs a two-sided public key')
    message = np.asarray(message, dtype=np.float64)
    w = _noise(seed, (pk.r, pk.q), zero_noise)
    payload = matmul(pk.y1, message, pk.x1) + w - matmul(pk.y2f, w, pk.hx2)
    return Ciphertext(payload, None if zero_noise else seed)


def decrypt2(sk, ciphertext):
    if sk.h_star is None:
        raise ParameterError('ERROR: two-sided decryption needs a two-sided secret key')
    return matmul(sk.f, ciphertext.payload, sk.h_star)


def check_roundtrip(sk, pk, message, seed, two_sided=False,
                    max_residual=settings.RESIDUAL_TOLERANCE):
    """Encrypt and decrypt `message`; return the relative residual.

    Raises:
        ContainmentError if the message does not survive the roundtrip, which
        means it is not in the span of the dictionary.
    """
    if two_sided:
        decrypted = decrypt2(sk, encrypt2(pk, message, seed))
    else:
        decrypted = decrypt(sk, encrypt(pk, message, seed))
    residual = relative_residual(message, decrypted)
    if residual > max_residual:
        raise ContainmentError('ERROR: roundtrip residual {:.3g} exceeds {:.3g}, the '
                               'message is not in the dictionary span'.format(
                                   residual, max_residual), residual=residual)
    return residual
