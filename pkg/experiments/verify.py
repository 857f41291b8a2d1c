"""Check that F G H* reproduces A.

    python -m experiments.verify with a_path=A.csv f_path=F.csv g_path=G.csv h_path=H.csv
"""
from sacred import Experiment
from sacred.utils import apply_backspaces_and_linefeeds

from hidproj import settings
from hidproj.errors import HiddenProjectorError
from hidproj.linalg.solver import FactorizationTriple, verify_triple
from hidproj.serialization import read_matrix_csv

from .utils import FAILURE, SUCCESS, UsageError, attach_observer, exit_code, report, \
    require, run_and_exit

ex = Experiment('verify')
ex.captured_out_filter = apply_backspaces_and_linefeeds
attach_observer(ex)


@ex.config
def cfg():
    a_path = None
    f_path = None
    g_path = None
    h_path = None
    tol = settings.RESIDUAL_TOLERANCE
    seed = 0
    json_report = False


@ex.main
def verify(a_path, f_path, g_path, h_path, tol, json_report, _run):
    try:
        require(a_path=a_path, f_path=f_path, g_path=g_path, h_path=h_path)
        a = read_matrix_csv(a_path)
        triple = FactorizationTriple(read_matrix_csv(f_path), read_matrix_csv(g_path),
                                     read_matrix_csv(h_path))
        residual = verify_triple(a, triple).residual
    except (UsageError, OSError, HiddenProjectorError) as e:
        return exit_code(e)

    report(_run, {'residual': residual, 'tol': tol}, json_report)
    return SUCCESS if residual <= tol else FAILURE


if __name__ == '__main__':
    run_and_exit(ex)
