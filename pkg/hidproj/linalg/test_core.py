import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from numpy.testing import assert_allclose

from hidproj.errors import DimensionError, ParameterError
from .core import Tolerance, as_matrix, as_vector, check_penrose, close_in_norm, \
    frobenius_norm, identity, matmul, pinv, rank_of, sub, transpose
from .projectors import make_rng

PROPERTY_TOLERANCE = Tolerance(1e-12, 1e-10)


def random_matrix(seed, m, n, k=None):
    rng = make_rng(seed)
    if k is None:
        return rng.standard_normal((m, n))
    return rng.standard_normal((m, k)) @ rng.standard_normal((k, n))


@pytest.mark.parametrize('a, rank', [
    ([[0, 1, 1 / 2], [1, 2, 3 / 2], [2, 7, 9 / 2]], 2),
    (np.eye(3), 3),
    ([[1, 2], [2, 4]], 1),
    (np.zeros((3, 2)), 0),
])
def test_rank_of_examples(a, rank):
    report = rank_of(a)
    assert report.rank == rank
    assert np.all(np.diff(report.singular_values) <= 0)
    assert report.tolerance > 0


def test_rank_of_empty_matrix_raises():
    with pytest.raises(DimensionError):
        rank_of(np.zeros((0, 3)))


def test_pinv_of_column_vector():
    assert_allclose(pinv([[1], [0], [1]]), [[1 / 2, 0, 1 / 2]], atol=1e-12)


def test_pinv_of_zero_matrix_is_transposed_zero():
    aplus = pinv(np.zeros((2, 3)))
    assert aplus.shape == (3, 2)
    assert not aplus.any()


def test_pinv_rank_one():
    expected = [[0.04, 0.08], [0.08, 0.16]]
    aplus = pinv([[1, 2], [2, 4]])
    assert_allclose(aplus, expected, atol=1e-12)
    assert all(check_penrose([[1, 2], [2, 4]], expected))


def test_pinv_truncates_to_given_rank():
    a = np.diag([3.0, 2.0, 1e-3])
    assert_allclose(pinv(a, rank=2), np.diag([1 / 3, 1 / 2, 0]), atol=1e-15)


def test_check_penrose_examples():
    f = [[1], [0], [1]]
    assert check_penrose(f, [[1 / 2, 0, 1 / 2]]) == (True, True, True, True)
    assert all(check_penrose(np.eye(2), np.eye(2)))
    # FG is not symmetric although FGF = F and GFG = G
    assert check_penrose(f, [[1, 0, 0]]) == (True, True, False, True)


def test_check_penrose_rejects_wrong_shape():
    with pytest.raises(DimensionError):
        check_penrose(np.ones((2, 3)), np.ones((2, 3)))


def test_matrix_plumbing():
    g = [[-2, 1], [1, 0]]
    assert_allclose(matmul(identity(2), g), g)
    assert frobenius_norm(np.zeros((2, 2))) == 0
    # similarity example, M B M^-1
    assert_allclose(matmul([[0, 1], [1, 1]], [[2, 4], [2, 3]], [[-1, 1], [1, 0]]),
                    [[1, 2], [3, 4]])
    assert_allclose(transpose([[1, 2, 3]]), [[1], [2], [3]])
    assert_allclose(sub([[1, 2]], [[1, 1]]), [[0, 1]])
    assert frobenius_norm([[3, 4]]) == pytest.approx(5)


def test_matmul_rejects_mismatched_shapes():
    with pytest.raises(DimensionError):
        matmul(np.ones((2, 3)), np.ones((2, 3)))
    with pytest.raises(DimensionError):
        sub(np.ones((2, 3)), np.ones((3, 2)))
    with pytest.raises(DimensionError):
        identity(0)


def test_as_matrix_is_read_only_and_validated():
    a = as_matrix([[1, 2], [3, 4]])
    with pytest.raises(ValueError):
        a[0, 0] = 5
    with pytest.raises(ParameterError):
        as_matrix([[1, np.nan]])
    with pytest.raises(DimensionError):
        as_matrix([1, 2, 3])
    with pytest.raises(DimensionError):
        as_matrix(np.zeros((0, 2)))
    assert as_vector([[1], [2]]).shape == (2,)


def test_results_are_read_only():
    a = np.array([[1.0, 2.0], [3.0, 4.0]])
    results = [pinv(a), matmul(a, a), matmul(a, a, a), matmul(a), transpose(a),
               sub(a, a), identity(2), rank_of(a).singular_values]
    for result in results:
        assert not result.flags.writeable
    assert a.flags.writeable


def test_tolerance_must_be_positive():
    with pytest.raises(ParameterError):
        Tolerance(0, 1e-10)
    assert Tolerance(1e-12, 1e-10).bound(1e3) == pytest.approx(1e-7)


def test_close_in_norm_is_scale_aware():
    assert close_in_norm([[1e6]], [[1e6 + 1e-5]])
    assert not close_in_norm([[1.0]], [[1.0 + 1e-6]])


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2 ** 32), st.integers(1, 12), st.integers(1, 12), st.booleans())
def test_pinv_satisfies_penrose_equations(seed, m, n, low_rank):
    k = max(1, min(m, n) // 2) if low_rank else None
    a = random_matrix(seed, m, n, k)
    aplus = pinv(a)
    assert all(check_penrose(a, aplus, PROPERTY_TOLERANCE))
    assert close_in_norm(pinv(aplus), a, PROPERTY_TOLERANCE)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2 ** 32), st.integers(1, 12), st.integers(1, 12),
       st.integers(1, 12))
def test_rank_is_invariant_under_transpose_and_permutation(seed, m, n, k):
    a = random_matrix(seed, m, n, min(k, m, n))
    rank = rank_of(a).rank
    assert rank == min(k, m, n)
    assert rank_of(a.T).rank == rank
    rng = make_rng(seed, 1)
    assert rank_of(a[rng.permutation(m)][:, rng.permutation(n)]).rank == rank
