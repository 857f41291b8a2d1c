"""Solve F G H* = A for the mixing matrix G.

    python -m experiments.solve with a_path=A.csv f_path=F.csv h_path=H.csv seed=3
"""
from sacred import Experiment
from sacred.utils import apply_backspaces_and_linefeeds

from hidproj import settings
from hidproj.errors import HiddenProjectorError
from hidproj.linalg.projectors import check_rank_preserving
from hidproj.linalg.solver import SolverInputs, mixing_from_pair, sketch_inverse_pair, \
    verify_triple
from hidproj.serialization import read_matrix_csv, write_matrix_csv

from .utils import SUCCESS, UsageError, attach_observer, exit_code, report, require, \
    run_and_exit

ex = Experiment('solve')
ex.captured_out_filter = apply_backspaces_and_linefeeds
attach_observer(ex)


@ex.config
def cfg():
    a_path = None
    f_path = None
    # H* (q×n), not H
    h_path = None
    # optional sketches and homogeneous term, drawn from seed / zero when left out
    b_path = None
    d_path = None
    w_path = None
    seed = 0
    out_path = None
    tol = settings.RESIDUAL_TOLERANCE
    json_report = False


def read_optional(filename):
    return None if filename is None else read_matrix_csv(filename)


@ex.main
def solve(a_path, f_path, h_path, b_path, d_path, w_path, seed, out_path, tol,
          json_report, _run):
    try:
        require(a_path=a_path, f_path=f_path, h_path=h_path)
        inputs = SolverInputs(read_matrix_csv(a_path), read_matrix_csv(f_path),
                              read_matrix_csv(h_path), read_optional(b_path),
                              read_optional(d_path), read_optional(w_path))
        pair = sketch_inverse_pair(inputs, seed=seed)
        triple = mixing_from_pair(inputs, pair, max_residual=tol)
        residuals = verify_triple(inputs.a, triple, pair)
        ranks = check_rank_preserving(pair.b, triple.f, triple.h_star.T, pair.d, pair.k)
        if out_path is not None:
            write_matrix_csv(out_path, triple.g)
    except (UsageError, OSError, HiddenProjectorError) as e:
        return exit_code(e)

    report(_run, {'g': triple.g, 'err': residuals.residual, 'err1': residuals.err1,
                  'err2': residuals.err2, 'k': pair.k,
                  'rank_def': [ranks.target_k, ranks.rank_bf, ranks.rank_f, ranks.rank_hd,
                               ranks.rank_h]}, json_report)
    return SUCCESS


if __name__ == '__main__':
    run_and_exit(ex)
