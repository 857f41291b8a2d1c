from .golden import GOLDEN_EXAMPLES, run_golden_checks


def test_all_worked_examples_pass():
    results = run_golden_checks()
    assert len(results) == len(GOLDEN_EXAMPLES)
    failed = [check.name for check in results if not check.passed]
    assert failed == []


def test_tighter_tolerance_never_passes_more():
    loose = run_golden_checks(1e-12)
    tight = run_golden_checks(1e-15)
    assert sum(check.passed for check in tight) <= sum(check.passed for check in loose)
    for check in tight:
        assert check.passed == (check.error <= 1e-15)
