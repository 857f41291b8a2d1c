"""Factorize a matrix CSV into the reduced form F G H*.

    python -m experiments.factorize with input_path=A.csv method=cur cols=[1,2] rows=[1,2]
"""
from sacred import Experiment
from sacred.utils import apply_backspaces_and_linefeeds

from hidproj import settings
from hidproj.errors import HiddenProjectorError, ParameterError
from hidproj.factorizations import ColumnRowSelection, get_factorization
from hidproj.linalg.core import rank_of
from hidproj.linalg.solver import verify_triple
from hidproj.serialization import read_matrix_csv, write_matrix_csv

from .utils import FAILURE, SUCCESS, UsageError, attach_observer, exit_code, report, \
    require, run_and_exit

ex = Experiment('factorize')
ex.captured_out_filter = apply_backspaces_and_linefeeds
attach_observer(ex)


@ex.config
def cfg():
    input_path = None
    # one of svd, qr, lu, cur, random
    method = 'svd'
    # svd only, defaults to the numerical rank
    rank = None
    # cur only, 1-based
    cols = None
    rows = None
    # random only
    r = None
    q = None
    seed = 0
    # writes <out_prefix>_f.csv, _g.csv and _h.csv
    out_prefix = None
    tol = settings.RESIDUAL_TOLERANCE
    json_report = False


def build_form(a, method, rank, cols, rows, r, q, seed):
    try:
        factorization = get_factorization(method)
    except ParameterError as e:
        raise UsageError(str(e))
    if method == 'svd':
        return factorization(a, rank_of(a).rank if rank is None else rank)
    if method == 'cur':
        require(cols=cols, rows=rows)
        return factorization(a, ColumnRowSelection.from_one_based(cols, rows))
    if method in ['random', 'randomized']:
        require(r=r, q=q)
        return factorization(a, r, q, seed)
    return factorization(a)


@ex.main
def factorize(input_path, method, rank, cols, rows, r, q, seed, out_prefix, tol,
              json_report, _run):
    try:
        require(input_path=input_path)
        a = read_matrix_csv(input_path)
        form = build_form(a, method, rank, cols, rows, r, q, seed)
        residual = verify_triple(a, form).residual
        if out_prefix is not None:
            for suffix, factor in zip(['f', 'g', 'h'], form[:3]):
                write_matrix_csv('{}_{}.csv'.format(out_prefix, suffix), factor)
    except (UsageError, OSError, HiddenProjectorError) as e:
        return exit_code(e)

    report(_run, {'method': form.source, 'shape': list(a.shape), 'k': form.g.shape[0],
                  'residual': residual, 'g': form.g}, json_report)
    if residual > tol:
        print('ERROR: relative residual {:.3g} exceeds {:.3g}'.format(residual, tol))
        return FAILURE
    return SUCCESS


if __name__ == '__main__':
    run_and_exit(ex)
