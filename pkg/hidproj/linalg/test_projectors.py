import numpy as np
import pytest
from numpy.testing import assert_allclose

from hidproj.errors import DimensionError, ParameterError, RankPreservationError, \
    SketchRetryError
from .core import Tolerance, close_in_norm, frobenius_norm, pinv, rank_of
from .projectors import build_inverse_pair, check_key_equation, \
    check_projector_equation, check_rank_preserving, is_idempotent, make_rng, make_x, \
    make_y_star, random_rank_preserving_sketch

PROPERTY_TOLERANCE = Tolerance(1e-12, 1e-10)

# full-rank worked example
A = np.array([[0, 1, 1 / 2], [1, 2, 3 / 2], [2, 7, 9 / 2]])
F = A[:, :2]
H_STAR = A[:2, :]
B = np.array([[1, 0], [0, 1], [1, 1]])
D = np.array([[1, 0], [0, 1], [0, 1]])

# rank-deficient worked example, F = H* = A
A_LOW = np.array([[0, 1, 1 / 2], [0, 2, 1]])
B_LOW = np.array([[1, 0, 1], [2, 0, 2]])
D_LOW = np.array([[1, 1], [0, 0], [1, 1]])


def test_make_y_star_full_rank_example():
    assert_allclose(make_y_star(B, F), [[-3 / 2, 4 / 3, -1 / 6], [1 / 2, -1 / 3, 1 / 6]],
                    atol=1e-12)


def test_make_y_star_rank_deficient_example():
    assert_allclose(make_y_star(B_LOW, A_LOW),
                    [[0, 0], [4 / 25, 8 / 25], [2 / 25, 4 / 25]], atol=1e-12)


def test_make_x_examples():
    assert_allclose(make_x(D, H_STAR), [[-7 / 3, 1], [2 / 3, 0], [2 / 3, 0]], atol=1e-12)
    assert_allclose(make_x(D_LOW, A_LOW), [[2 / 5, 4 / 5], [0, 0], [2 / 5, 4 / 5]],
                    atol=1e-12)


def test_identity_sketches_give_identity():
    assert_allclose(make_y_star(np.eye(2), np.eye(2)), np.eye(2))
    assert_allclose(make_x(np.eye(2), np.eye(2)), np.eye(2))


def test_make_y_star_rejects_bad_sketches():
    with pytest.raises(DimensionError):
        make_y_star(np.ones((3, 3)), F)
    # B orthogonal to C(F)
    with pytest.raises(RankPreservationError) as error:
        make_y_star([[1], [1], [-1]], [[1], [0], [1]])
    assert error.value.rank == 0
    assert error.value.target == 1
    with pytest.raises(DimensionError):
        make_x(D.T, H_STAR)


def test_check_rank_preserving_examples():
    check = check_rank_preserving(B, F, H_STAR.T, D, 2, strict=True)
    assert check.holds
    assert check.rank_bf == check.rank_hd == check.rank_f == check.rank_h == 2

    check = check_rank_preserving(np.zeros_like(B), F, H_STAR.T, D, 2)
    assert check.rank_bf == 0
    assert not check.holds

    check = check_rank_preserving(B_LOW, A_LOW, A_LOW.T, D_LOW, 1, strict=True)
    assert check.holds
    assert check[:4] == (1, 1, 1, 1)

    with pytest.raises(DimensionError):
        check_rank_preserving(B, F, H_STAR, D, 2)


def test_is_idempotent_examples():
    assert is_idempotent([[1 / 2, 0, 1 / 2], [0, 0, 0], [1 / 2, 0, 1 / 2]])
    assert is_idempotent(np.eye(4))
    assert not is_idempotent(2 * np.eye(2))
    with pytest.raises(DimensionError):
        is_idempotent(np.ones((2, 3)))


def test_projector_equation():
    pair = build_inverse_pair(F, H_STAR, B, D)
    assert pair.k == 2
    assert check_projector_equation(pair.y_star, F, H_STAR, pair.x)

    f = make_rng(3).standard_normal((5, 2))
    assert check_projector_equation(pinv(f), f, np.eye(2), np.eye(2))

    pair = build_inverse_pair(A_LOW, A_LOW, B_LOW, D_LOW)
    y_f = pair.y_star @ A_LOW
    assert_allclose(y_f, [[0, 0, 0], [0, 4 / 5, 2 / 5], [0, 2 / 5, 1 / 5]], atol=1e-12)
    assert not check_projector_equation(pair.y_star, A_LOW, A_LOW, pair.x)


def test_key_equation():
    pair = build_inverse_pair(F, H_STAR, B, D)
    assert check_key_equation(A, F, pair.y_star, pair.x, H_STAR)
    eye = np.eye(3)
    assert check_key_equation(eye, eye, eye, eye, eye)

    rng = make_rng(11)
    a = rng.standard_normal((6, 2)) @ rng.standard_normal((2, 6))
    f = a @ rng.standard_normal((6, 4))
    h_star = rng.standard_normal((4, 6)) @ a
    b = random_rank_preserving_sketch(f, 2, 11, stream=1)
    d = random_rank_preserving_sketch(h_star.T, 2, 11, stream=2)
    pair = build_inverse_pair(f, h_star, b, d, k=2)
    assert check_key_equation(a, f, pair.y_star, pair.x, h_star, PROPERTY_TOLERANCE)
    assert not check_key_equation(a + np.eye(6), f, pair.y_star, pair.x, h_star)


def test_random_sketch_is_rank_preserving():
    rng = make_rng(5)
    f = rng.standard_normal((8, 3))
    b = random_rank_preserving_sketch(f, 3, 5)
    assert b.shape == (8, 3)
    assert rank_of(b.T @ f).rank == 3

    f = rng.standard_normal((8, 2)) @ rng.standard_normal((2, 5))
    b = random_rank_preserving_sketch(f, 2, 5)
    assert b.shape == (8, 5)
    assert rank_of(b).rank == 2
    assert rank_of(b.T @ f).rank == 2


def test_random_sketch_is_deterministic_per_stream():
    f = make_rng(1).standard_normal((6, 3))
    assert_allclose(random_rank_preserving_sketch(f, 3, 9),
                    random_rank_preserving_sketch(f, 3, 9))
    assert not np.allclose(random_rank_preserving_sketch(f, 3, 9, stream=0),
                           random_rank_preserving_sketch(f, 3, 9, stream=1))


def test_random_sketch_fails_on_zero_basis():
    with pytest.raises(SketchRetryError):
        random_rank_preserving_sketch(np.zeros((4, 2)), 1, 0)
    with pytest.raises(ParameterError):
        random_rank_preserving_sketch(np.ones((4, 2)), 3, 0)


def test_negative_seed_is_rejected():
    with pytest.raises(ParameterError):
        make_rng(-1)


def test_generalized_inverse_properties_on_random_instances():
    for seed in range(25):
        rng = make_rng(seed)
        m, n = rng.integers(2, 13, size=2)
        k = int(rng.integers(1, min(m, n) + 1))
        r, q = k + rng.integers(0, 5, size=2)
        a = rng.standard_normal((m, k)) @ rng.standard_normal((k, n))
        f = a @ rng.standard_normal((n, r))
        h_star = rng.standard_normal((q, m)) @ a
        b = random_rank_preserving_sketch(f, k, seed, stream=1)
        d = random_rank_preserving_sketch(h_star.T, k, seed, stream=2)
        pair = build_inverse_pair(f, h_star, b, d, k=k)

        y_f = pair.y_star @ f
        h_x = h_star @ pair.x
        assert close_in_norm(f @ y_f, f, PROPERTY_TOLERANCE)
        assert close_in_norm(h_x @ h_star, h_star, PROPERTY_TOLERANCE)
        # (FY*)^2 = F(Y*F)Y* and (XH*)^2 = X(H*X)H*
        column = pair.column_projector(f)
        row = pair.row_projector(h_star)
        assert close_in_norm(f @ y_f @ pair.y_star, column, PROPERTY_TOLERANCE,
                             scale=frobenius_norm(column))
        assert close_in_norm(pair.x @ h_x @ h_star, row, PROPERTY_TOLERANCE,
                             scale=frobenius_norm(row))
        assert rank_of(column, PROPERTY_TOLERANCE).rank == k
        assert rank_of(row, PROPERTY_TOLERANCE).rank == k


def test_different_sketches_give_different_inverses():
    rng = make_rng(2)
    f = rng.standard_normal((7, 3))
    y1 = make_y_star(random_rank_preserving_sketch(f, 3, 2, stream=1), f)
    y2 = make_y_star(random_rank_preserving_sketch(f, 3, 2, stream=2), f)
    assert frobenius_norm(y1 - y2) > 1e-6
    assert close_in_norm(f @ (y1 @ f), f, PROPERTY_TOLERANCE)
    assert close_in_norm(f @ (y2 @ f), f, PROPERTY_TOLERANCE)
