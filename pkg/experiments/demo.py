"""Replay every hand-checked worked example.

    python -m experiments.demo
    python -m experiments.demo with tol=1e-15 json_report=True
"""
from sacred import Experiment
from sacred.utils import apply_backspaces_and_linefeeds
from sys import stdout

from hidproj.golden import run_golden_checks

from .utils import FAILURE, SUCCESS, attach_observer, report, run_and_exit

ex = Experiment('demo')
ex.captured_out_filter = apply_backspaces_and_linefeeds
attach_observer(ex)


@ex.config
def cfg():
    # absolute per-entry tolerance
    tol = 1e-12
    seed = 0
    json_report = False


@ex.main
def demo(tol, json_report, _run):
    checks = run_golden_checks(atol=tol)
    for check in checks:
        print('{}  {:<45} max error {:.2e}'.format('PASS' if check.passed else 'FAIL',
                                                  check.name, check.error))
    stdout.flush()
    failed = [check.name for check in checks if not check.passed]
    report(_run, {'passed': [check.name for check in checks if check.passed],
                  'failed': failed}, json_report)
    return FAILURE if failed else SUCCESS


if __name__ == '__main__':
    run_and_exit(ex)
