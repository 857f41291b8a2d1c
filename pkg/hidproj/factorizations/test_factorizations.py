import numpy as np
import pytest
from numpy.testing import assert_allclose

from hidproj.errors import DimensionError, InvalidSelectionError, ParameterError, \
    RankPreservationError, SingularMatrixError
from hidproj.linalg.core import rank_of
from hidproj.linalg.projectors import make_rng
from hidproj.linalg.solver import verify_triple
from . import ColumnRowSelection, ReducedForm, cpqr, cpqr_reduced, cur, cur_exactness, \
    get_factorization, lu_reduced, outer_product_expand, outer_product_form, \
    randomized_reduced, reduced_svd, similarity_check, similarity_form

A = np.array([[0, 1, 1 / 2], [1, 2, 3 / 2], [2, 7, 9 / 2]])


def random_low_rank(seed, m, n, k):
    rng = make_rng(seed)
    return rng.standard_normal((m, k)) @ rng.standard_normal((k, n))


def random_shapes(count):
    rng = make_rng(1234)
    for seed in range(count):
        m, n = (int(x) for x in rng.integers(1, 13, size=2))
        k = int(rng.integers(1, min(m, n) + 1))
        yield seed, m, n, k


def test_reduced_form_validates():
    with pytest.raises(ParameterError):
        ReducedForm(np.eye(2), np.eye(2), np.eye(2), 'schur')
    with pytest.raises(DimensionError):
        ReducedForm(np.eye(2), np.eye(3), np.eye(3), 'cur')


def test_reduced_svd_examples():
    form = reduced_svd([[1, 1], [1, -1], [1, 1]], 2)
    assert_allclose(np.diag(form.g), [2, np.sqrt(2)], atol=1e-12)
    assert verify_triple([[1, 1], [1, -1], [1, 1]], form).residual <= 1e-12

    assert_allclose(reduced_svd(np.eye(2), 2).g, np.eye(2), atol=1e-15)

    form = reduced_svd([[3, 0], [0, 0]], 1)
    assert_allclose(form.f, [[1], [0]], atol=1e-15)
    assert_allclose(form.g, [[3]], atol=1e-15)
    assert_allclose(form.h_star, [[1, 0]], atol=1e-15)


def test_reduced_svd_rejects_rank_out_of_range():
    with pytest.raises(ParameterError):
        reduced_svd([[3, 0], [0, 0]], 2)
    with pytest.raises(ParameterError):
        reduced_svd(np.eye(2), 0)


def test_reduced_svd_shares_the_rank_spectrum():
    a = random_low_rank(3, 9, 7, 4)
    form = reduced_svd(a, 4)
    assert_allclose(np.diag(form.g), rank_of(a).singular_values[:4], atol=1e-12)
    for j in range(4):
        column = form.f[:, j]
        assert column[np.flatnonzero(np.abs(column) > 1e-12)[0]] > 0


def test_cpqr_examples():
    a = np.array([[1, 1], [0, -1], [0, 0]])
    form = cpqr_reduced(a)
    assert form.g.shape == (2, 2)
    assert verify_triple(a, form).residual <= 1e-12

    form = cpqr_reduced(np.eye(3))
    assert_allclose(form.g, np.eye(3))
    assert verify_triple(np.eye(3), form).residual <= 1e-15

    a = random_low_rank(4, 6, 4, 2)
    form = cpqr_reduced(a)
    assert form.g.shape == (2, 2)
    assert verify_triple(a, form).residual <= 1e-10


def test_cpqr_pivots_by_column_norm():
    _, r, perm = cpqr(random_low_rank(5, 7, 5, 5))
    assert np.all(np.diff(np.abs(np.diag(r))) <= 1e-12)
    assert sorted(perm) == list(range(5))


def test_cpqr_rejects_zero_matrix():
    with pytest.raises(ParameterError):
        cpqr_reduced(np.zeros((3, 2)))


def test_lu_example():
    form = lu_reduced([[0, 1, 1], [1, 2, 1], [2, 7, 9]])
    assert_allclose(form.g, [[1, 0, 0], [1 / 2, 1, 0], [0, -2 / 3, 1]], atol=1e-12)
    assert_allclose(form.h_star, [[2, 7, 9], [0, -3 / 2, -7 / 2], [0, 0, -4 / 3]],
                    atol=1e-12)


def test_lu_trivial_cases():
    form = lu_reduced(np.eye(3))
    for factor in form[:3]:
        assert_allclose(factor, np.eye(3))
    form = lu_reduced([[0, 1], [1, 0]])
    assert_allclose(form.f, [[0, 1], [1, 0]])
    assert_allclose(form.g, np.eye(2))
    assert_allclose(form.h_star, np.eye(2))


def test_lu_reports_failing_pivot():
    with pytest.raises(SingularMatrixError) as error:
        lu_reduced([[1, 2], [2, 4]])
    assert error.value.step == 2
    with pytest.raises(DimensionError):
        lu_reduced(np.ones((2, 3)))


def test_lu_properties_on_random_matrices():
    for seed in range(30):
        a = make_rng(seed).standard_normal((6, 6))
        p, lower, upper = lu_reduced(a)[:3]
        assert np.linalg.norm(p.T @ a - lower @ upper) <= 1e-12 * np.linalg.norm(a)
        assert_allclose(np.diag(lower), 1)
        assert np.all(np.abs(lower) <= 1 + 1e-15)
        assert_allclose(np.triu(upper), upper)


def test_cur_examples():
    form = cur(A, ColumnRowSelection.from_one_based([1, 2], [1, 2]))
    assert_allclose(form.g, [[-2, 1], [1, 0]], atol=1e-12)
    assert verify_triple(A, form).residual <= 1e-12
    assert cur_exactness(A, form).exact

    form = cur(A, ColumnRowSelection(range(3), range(3)))
    assert_allclose(form.g, np.linalg.pinv(A), atol=1e-10)
    assert verify_triple(A, form).residual <= 1e-12

    form = cur(A, ColumnRowSelection([0], [0]))
    assert verify_triple(A, form).residual > 0.1
    assert cur_exactness(A, form) == (1, 2, False)


def test_cur_rejects_bad_selection():
    for sel in [ColumnRowSelection([0, 3], [0]), ColumnRowSelection([0, 0], [1]),
                ColumnRowSelection([], [1])]:
        with pytest.raises(InvalidSelectionError):
            cur(A, sel)


def test_cur_exactness_both_directions():
    for seed in range(20):
        a = random_low_rank(seed, 8, 6, 3)
        rng = make_rng(seed, 1)
        exact = ColumnRowSelection(rng.permutation(6)[:3], rng.permutation(8)[:4])
        form = cur(a, exact)
        assert cur_exactness(a, form).exact
        assert verify_triple(a, form).residual <= 1e-10

        short = ColumnRowSelection(rng.permutation(6)[:2], rng.permutation(8)[:4])
        form = cur(a, short)
        assert not cur_exactness(a, form).exact
        assert verify_triple(a, form).residual > 1e-6


def test_outer_product_expand():
    a = np.array([[1, 1], [1, -1], [1, 1]])
    terms = outer_product_expand(reduced_svd(a, 2))
    assert_allclose([weight for weight, _, _ in terms], [2, np.sqrt(2)], atol=1e-12)
    assert_allclose(sum(w * np.outer(f, h) for w, f, h in terms), a, atol=1e-12)

    b, d = np.array([[1, 0], [2, 1], [0, 3]]), np.array([[1, 2], [0, 1]])
    terms = outer_product_expand(outer_product_form(b, d))
    assert [weight for weight, _, _ in terms] == [1, 1]
    assert_allclose(sum(np.outer(f, h) for _, f, h in terms), b @ d)

    a = random_low_rank(2, 5, 4, 1)
    terms = outer_product_expand(reduced_svd(a, 1))
    assert len(terms) == 1
    weight, f, h = terms[0]
    assert np.linalg.norm(weight * np.outer(f, h) - a) <= 1e-12 * np.linalg.norm(a)


def test_outer_product_expand_needs_diagonal_mixing():
    with pytest.raises(DimensionError):
        outer_product_expand(cur(A, ColumnRowSelection([0, 1], [0, 1])))


def test_similarity():
    a, m_mat, b = [[1, 2], [3, 4]], [[0, 1], [1, 1]], [[2, 4], [2, 3]]
    assert similarity_check(a, m_mat, b)
    assert similarity_check(a, np.eye(2), a)
    assert not similarity_check(a, np.eye(2), np.array(a) + np.eye(2))
    with pytest.raises(SingularMatrixError):
        similarity_check(a, [[1, 2], [2, 4]], b)
    form = similarity_form(m_mat, b)
    assert_allclose(form.h_star, [[-1, 1], [1, 0]], atol=1e-12)
    assert verify_triple(a, form).residual <= 1e-12


def test_randomized_reduced():
    a = random_low_rank(1, 10, 7, 3)
    form = randomized_reduced(a, 5, 4, 1)
    assert form.f.shape == (10, 5)
    assert form.h_star.shape == (4, 7)
    assert verify_triple(a, form).residual <= 1e-10

    a = make_rng(2).standard_normal((5, 5))
    assert verify_triple(a, randomized_reduced(a, 5, 5, 2)).residual <= 1e-10

    with pytest.raises(RankPreservationError):
        randomized_reduced(np.zeros((4, 3)), 2, 2, 0)
    with pytest.raises(ParameterError):
        randomized_reduced(random_low_rank(1, 10, 7, 3), 2, 4, 1)


def test_every_adapter_reconstructs_random_matrices():
    for seed, m, n, k in random_shapes(50):
        a = random_low_rank(seed, m, n, k)
        forms = [reduced_svd(a, k), cpqr_reduced(a),
                 cur(a, ColumnRowSelection(range(n), range(m))),
                 randomized_reduced(a, k + 2, k + 1, seed)]
        if m == n == k:
            forms.append(lu_reduced(a))
        for form in forms:
            assert verify_triple(a, form).residual <= 1e-10, form.source


def test_get_factorization():
    assert get_factorization('svd') is reduced_svd
    assert get_factorization('qr') is cpqr_reduced
    assert get_factorization('random') is randomized_reduced
    with pytest.raises(ParameterError):
        get_factorization('schur')
