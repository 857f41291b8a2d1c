"""Reading and writing matrices, keys, ciphertexts and dictionaries.

Matrices are plain CSV, one row per line and no header. Keys and ciphertexts are
JSON documents with a format version; matrices inside them are stored as
{"rows", "cols", "data"} with row-major data in shortest round-trip decimal form,
so a written key reads back bit for bit.
"""
import json
from os import path

import numpy as np

from hidproj.crypto.cipher import Ciphertext
from hidproj.crypto.dictionary import load_dictionary
from hidproj.crypto.keys import PublicKey, SecretKey
from hidproj.errors import FormatError
from hidproj.linalg.core import as_matrix

FORMAT_VERSION = 1
MODES = ('one-sided', 'two-sided')


def read_matrix_csv(filename):
    """Parse a matrix CSV file.

    Raises:
        FormatError on empty files, ragged rows or non-numeric entries.
    """
    with open(filename) as f:
        lines = [line for line in f.read().splitlines() if line.strip()]
    if not lines:
        raise FormatError('ERROR: {} is empty'.format(filename))
    widths = {len(line.split(',')) for line in lines}
    if len(widths) != 1:
        raise FormatError('ERROR: {} has ragged rows of widths {}'.format(
            filename, sorted(widths)))
    try:
        data = np.loadtxt(lines, delimiter=',', ndmin=2, dtype=np.float64)
    except ValueError as e:
        raise FormatError('ERROR: cannot parse {}: {}'.format(filename, e)) from e
    try:
        return as_matrix(data)
    except ValueError as e:
        raise FormatError('ERROR: {}: {}'.format(filename, e)) from e


def write_matrix_csv(filename, a):
    np.savetxt(filename, np.atleast_2d(np.asarray(a, dtype=np.float64)), delimiter=',',
               fmt='%.17g')


def matrix_to_json(a):
    if a is None:
        return None
    a = np.asarray(a, dtype=np.float64)
    if a.ndim == 1:
        a = a[:, None]
    return {'rows': a.shape[0], 'cols': a.shape[1],
            'data': [float(x) for x in a.ravel()]}


def matrix_from_json(blob, name='matrix', allow_empty=False):
    if blob is None:
        return None
    try:
        rows, cols, data = int(blob['rows']), int(blob['cols']), blob['data']
        a = np.array(data, dtype=np.float64)
    except (KeyError, TypeError, ValueError) as e:
        raise FormatError('ERROR: malformed {} entry: {}'.format(name, e)) from e
    if rows < 0 or cols < 0 or a.shape != (rows * cols,):
        raise FormatError('ERROR: {} declares {}x{} but holds {} values'.format(
            name, rows, cols, a.size))
    if a.size == 0:
        if not allow_empty:
            raise FormatError('ERROR: {} is empty'.format(name))
        return np.zeros((rows, cols))
    if not np.all(np.isfinite(a)):
        raise FormatError('ERROR: {} contains NaN or Inf entries'.format(name))
    return a.reshape(rows, cols)


def _dump(filename, blob):
    with open(filename, 'w') as f:
        json.dump(blob, f, indent=1)


def _load(filename, required):
    try:
        with open(filename) as f:
            blob = json.load(f)
    except json.JSONDecodeError as e:
        raise FormatError('ERROR: {} is not valid JSON: {}'.format(filename, e)) from e
    if not isinstance(blob, dict):
        raise FormatError('ERROR: {} does not hold a JSON object'.format(filename))
    if blob.get('version') != FORMAT_VERSION:
        raise FormatError('ERROR: {} has unsupported format version {}'.format(
            filename, blob.get('version')))
    missing = [key for key in required if key not in blob]
    if missing:
        raise FormatError('ERROR: {} misses the entries {}'.format(filename, missing))
    if 'mode' in required and blob['mode'] not in MODES:
        raise FormatError('ERROR: {} has unknown mode {}'.format(filename, blob['mode']))
    return blob


def write_secret_key(filename, sk):
    _dump(filename, {'version': FORMAT_VERSION, 'mode': sk.mode,
                     'f': matrix_to_json(sk.f), 'h_star': matrix_to_json(sk.h_star)})


def read_secret_key(filename):
    blob = _load(filename, ['mode', 'f', 'h_star'])
    sk = SecretKey(matrix_from_json(blob['f'], 'f'),
                   matrix_from_json(blob['h_star'], 'h_star'))
    if sk.mode != blob['mode']:
        raise FormatError('ERROR: {} declares mode {} but holds a {} key'.format(
            filename, blob['mode'], sk.mode))
    return sk


def write_public_key(filename, pk):
    _dump(filename, {'version': FORMAT_VERSION, 'mode': pk.mode,
                     'y1': matrix_to_json(pk.y1), 'y2f': matrix_to_json(pk.y2f),
                     'x1': matrix_to_json(pk.x1), 'hx2': matrix_to_json(pk.hx2),
                     'r': pk.r, 'k': pk.k})


def read_public_key(filename):
    blob = _load(filename, ['mode', 'y1', 'y2f', 'x1', 'hx2', 'r', 'k'])
    pk = PublicKey(matrix_from_json(blob['y1'], 'y1'), matrix_from_json(blob['y2f'], 'y2f'),
                   matrix_from_json(blob['x1'], 'x1'), matrix_from_json(blob['hx2'], 'hx2'),
                   int(blob['r']), int(blob['k']))
    if pk.mode != blob['mode'] or pk.y1.shape[0] != pk.r or \
            pk.y2f.shape != (pk.r, pk.r) or (pk.x1 is None) != (pk.hx2 is None):
        raise FormatError('ERROR: {} holds inconsistent key material'.format(filename))
    return pk


def write_ciphertext(filename, ciphertext):
    _dump(filename, {'version': FORMAT_VERSION,
                     'payload': matrix_to_json(ciphertext.payload),
                     'length': ciphertext.length})


def read_ciphertext(filename):
    blob = _load(filename, ['payload', 'length'])
    payload = matrix_from_json(blob['payload'], 'payload', allow_empty=True)
    return Ciphertext(payload, length=int(blob['length']))


def sidecar_path(csv_filename):
    return path.splitext(csv_filename)[0] + '.json'


def write_dictionary(csv_filename, dictionary):
    """Write the dictionary matrix as CSV next to its JSON sidecar."""
    write_matrix_csv(csv_filename, dictionary.a)
    _dump(sidecar_path(csv_filename), {'version': FORMAT_VERSION, 'symbol_map': 'implicit',
                                       'k': dictionary.k,
                                       'decode_margin': dictionary.decode_margin})


def read_dictionary(csv_filename):
    """Read a dictionary CSV. Without a sidecar, the rank and default margin are used."""
    a = read_matrix_csv(csv_filename)
    sidecar = sidecar_path(csv_filename)
    if not path.exists(sidecar):
        return load_dictionary(a)
    blob = _load(sidecar, ['symbol_map', 'k', 'decode_margin'])
    if blob['symbol_map'] != 'implicit':
        raise FormatError('ERROR: unsupported symbol map {}'.format(blob['symbol_map']))
    return load_dictionary(a, int(blob['k']), float(blob['decode_margin']))
