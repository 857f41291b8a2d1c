"""Rank-deficient dictionaries: one column per symbol."""
from collections import namedtuple

import numpy as np
from scipy.spatial.distance import pdist

from hidproj import settings
from hidproj.errors import DecodeError, DimensionError, ParameterError
from hidproj.linalg.core import CHECK_TOLERANCE, rank_of
from hidproj.linalg.projectors import make_rng

TEXT_SYMBOLS = 256


class Dictionary(namedtuple('Dictionary', ['a', 'k', 'decode_margin'])):
    """An m×n matrix of rank k < min(m, n); byte value j maps to column j."""

    __slots__ = ()

    @property
    def shape(self):
        return self.a.shape

    @property
    def symbols(self):
        return self.a.shape[1]

    def min_separation(self):
        if self.symbols < 2:
            return np.inf
        return float(pdist(self.a.T).min())


def build_dictionary(m, k, n=TEXT_SYMBOLS, seed=0, decode_margin=settings.DECODE_MARGIN,
                     max_retries=settings.DICTIONARY_RETRIES):
    """A = V C with Gaussian V (m×k) and C (k×n).

    Draws are repeated until A has rank k and its columns are pairwise further apart
    than `decode_margin`.
    """
    if not 1 <= k < min(m, n):
        raise ParameterError('ERROR: dictionary rank k={} must satisfy 1 <= k < min(m={}, '
                             'n={})'.format(k, m, n))
    if not decode_margin > 0:
        raise ParameterError('ERROR: decode margin must be positive')
    rng = make_rng(seed)
    for attempt in range(max_retries):
        a = rng.standard_normal((m, k)) @ rng.standard_normal((k, n))
        dictionary = Dictionary(a, k, decode_margin)
        if rank_of(a).rank == k and dictionary.min_separation() > decode_margin:
            return dictionary
        print('WARNING: dictionary draw {} is degenerate, drawing again'.format(attempt))
    raise ParameterError('ERROR: no separated rank-{} dictionary found in {} draws'.format(
        k, max_retries))


def load_dictionary(a, k=None, decode_margin=settings.DECODE_MARGIN):
    """Wrap a given matrix, checking rank deficiency and column separation."""
    a = np.asarray(a, dtype=np.float64)
    rank = rank_of(a).rank
    if k is not None and k != rank:
        raise ParameterError('ERROR: dictionary has rank {}, expected {}'.format(rank, k))
    if not 1 <= rank < min(a.shape):
        raise ParameterError('ERROR: dictionary of shape {} has rank {}, it must be '
                             'rank-deficient'.format(a.shape, rank))
    dictionary = Dictionary(a, rank, decode_margin)
    if dictionary.min_separation() <= decode_margin:
        raise ParameterError('ERROR: dictionary columns are closer than the decode '
                             'margin {}'.format(decode_margin))
    return dictionary


def decode_symbol(dictionary, vector):
    """Index of the dictionary column nearest to `vector`.

    Raises:
        DecodeError if the nearest column is further than half the decode margin
        or not unique.
    """
    vector = np.asarray(vector, dtype=np.float64)
    if vector.shape != (dictionary.a.shape[0],):
        raise DimensionError('ERROR: vector of shape {} does not fit a dictionary with '
                             '{} rows'.format(vector.shape, dictionary.a.shape[0]))
    distances = np.linalg.norm(dictionary.a - vector[:, None], axis=0)
    order = np.argsort(distances)
    best = distances[order[0]]
    if best > dictionary.decode_margin / 2:
        raise DecodeError('ERROR: nearest column is {:.3g} away, beyond the decode '
                          'margin'.format(best), distance=best)
    if len(order) > 1 and distances[order[1]] - best <= CHECK_TOLERANCE.bound(best):
        raise DecodeError('ERROR: columns {} and {} are equally close'.format(
            order[0], order[1]), distance=best)
    return int(order[0])


def encode_message(dictionary, data):
    """Map each byte of `data` to its dictionary column, giving an m×len(data) block."""
    symbols = list(bytes(data))
    if symbols and max(symbols) >= dictionary.symbols:
        raise ParameterError('ERROR: byte {} has no column in a dictionary with {} '
                             'symbols'.format(max(symbols), dictionary.symbols))
    return dictionary.a[:, symbols]


def decode_message(dictionary, block):
    block = np.asarray(block, dtype=np.float64)
    if block.ndim == 1:
        block = block[:, None]
    return bytes(decode_symbol(dictionary, block[:, j]) for j in range(block.shape[1]))
