"""Dictionaries and key pairs for the projector cipher.

    python -m experiments.keygen build_dictionary with out_dict=dict.csv
    python -m experiments.keygen with dict_path=dict.csv r=5 seed=7 \
        out_secret=sk.json out_public=pk.json
"""
import numpy as np
from sacred import Experiment
from sacred.utils import apply_backspaces_and_linefeeds

from hidproj import settings
from hidproj.crypto import build_dictionary as make_dictionary
from hidproj.crypto import keygen as make_keys
from hidproj.errors import HiddenProjectorError
from hidproj.linalg.core import CHECK_TOLERANCE, close_in_norm, rank_of
from hidproj.linalg.projectors import is_idempotent
from hidproj.serialization import read_dictionary, write_dictionary, \
    write_public_key, write_secret_key

from .utils import FAILURE, SUCCESS, UsageError, attach_observer, exit_code, report, \
    require, run_and_exit

ex = Experiment('keygen')
ex.captured_out_filter = apply_backspaces_and_linefeeds
attach_observer(ex)


@ex.config
def cfg():
    dict_path = None
    r = None
    two_sided = False
    q = None
    # 'random' (F = AΩ) or 'qr'
    basis = 'random'
    min_gap = settings.KEY_RANK_GAP
    seed = 0
    out_secret = None
    out_public = None
    json_report = False
    # build_dictionary
    m = 8
    k = 3
    n = 256
    decode_margin = settings.DECODE_MARGIN
    out_dict = None


def key_checks(sk, pk):
    """Invariants every generated key pair has to satisfy."""
    f = sk.f
    checks = {
        'generalized_inverse': close_in_norm(f @ pk.y1 @ f, f, CHECK_TOLERANCE),
        'y2f_idempotent': is_idempotent(pk.y2f, CHECK_TOLERANCE),
        'y2f_rank_deficient': rank_of(pk.y2f, CHECK_TOLERANCE).rank == pk.k < pk.r,
    }
    if sk.h_star is not None:
        h_star = sk.h_star
        checks['row_generalized_inverse'] = close_in_norm(h_star @ pk.x1 @ h_star, h_star,
                                                          CHECK_TOLERANCE)
        checks['hx2_idempotent'] = is_idempotent(pk.hx2, CHECK_TOLERANCE)
    return {name: bool(value) for name, value in checks.items()}


@ex.main
def keygen(dict_path, r, two_sided, q, basis, min_gap, seed, out_secret, out_public,
           json_report, _run):
    try:
        require(dict_path=dict_path, r=r, out_secret=out_secret, out_public=out_public)
        dictionary = read_dictionary(dict_path)
        sk, pk = make_keys(dictionary, r, seed, two_sided=two_sided, q=q, basis=basis,
                           min_gap=min_gap)
        checks = key_checks(sk, pk)
        write_secret_key(out_secret, sk)
        write_public_key(out_public, pk)
    except (UsageError, OSError, HiddenProjectorError) as e:
        return exit_code(e)

    report(_run, dict(k=pk.k, r=pk.r, mode=pk.mode, **checks), json_report)
    if not all(checks.values()):
        print('ERROR: generated keys violate their invariants')
        return FAILURE
    return SUCCESS


@ex.command
def build_dictionary(m, k, n, decode_margin, seed, out_dict, json_report, _run):
    """Draw a random rank-k dictionary and write it with its sidecar."""
    try:
        require(out_dict=out_dict)
        dictionary = make_dictionary(m, k, n, seed, decode_margin)
        write_dictionary(out_dict, dictionary)
    except (UsageError, OSError, HiddenProjectorError) as e:
        return exit_code(e)

    report(_run, {'shape': list(dictionary.shape), 'k': dictionary.k,
                  'min_separation': dictionary.min_separation(),
                  'max_abs_entry': float(np.abs(dictionary.a).max())}, json_report)
    return SUCCESS


if __name__ == '__main__':
    run_and_exit(ex)
