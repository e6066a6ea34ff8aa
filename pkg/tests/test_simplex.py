"""Dense-tableau simplex and the matrix-game reduction."""

import numpy as np
import pytest

from hoffman import simplex_maximize, solve_matrix_game


def test_small_lp_known_optimum():
    # max x + y  s.t.  x <= 2, y <= 3, x + y <= 4
    A = np.array([[1.0, 0.0], [0.0, 1.0], [1.0, 1.0]])
    x, duals, value = simplex_maximize(A, np.array([2.0, 3.0, 4.0]), np.array([1.0, 1.0]))
    assert abs(value - 4.0) < 1e-12
    assert np.allclose(A @ x, np.minimum(A @ x, [2.0, 3.0, 4.0]) + 1e-12)
    # strong duality: b . duals = optimum
    assert abs(np.dot(duals, [2.0, 3.0, 4.0]) - 4.0) < 1e-12


def test_lp_rejects_negative_rhs():
    with pytest.raises(ValueError):
        simplex_maximize(np.eye(2), np.array([-1.0, 1.0]), np.ones(2))


def test_degenerate_lp_terminates():
    # redundant constraints force degenerate pivots; Bland's rule must exit
    A = np.array([[1.0, 0.0], [1.0, 0.0], [0.0, 1.0], [1.0, 1.0]])
    b = np.array([1.0, 1.0, 1.0, 1.0])
    x, _, value = simplex_maximize(A, b, np.array([1.0, 1.0]))
    assert abs(value - 1.0) < 1e-12


def test_rock_paper_scissors_value_zero():
    p = np.array([[0.0, -1.0, 1.0], [1.0, 0.0, -1.0], [-1.0, 1.0, 0.0]])
    value, w = solve_matrix_game(p)
    assert abs(value) < 1e-12
    assert np.allclose(w, np.ones(3) / 3.0, atol=1e-12)


def test_two_by_two_mixed_game():
    p = np.array([[2.0, 1.0], [1.0, 2.0]])
    value, w = solve_matrix_game(p)
    assert abs(value - 1.5) < 1e-12
    assert np.allclose(w, [0.5, 0.5], atol=1e-12)


def test_dominant_row_gets_all_weight():
    p = np.array([[1.0, 2.0], [3.0, 4.0]])
    value, w = solve_matrix_game(p)
    assert abs(value - 3.0) < 1e-12
    assert np.allclose(w, [0.0, 1.0], atol=1e-12)


def test_game_value_certified_by_weights():
    rng = np.random.default_rng(13)
    for _ in range(20):
        p = rng.uniform(-3.0, 3.0, size=(int(rng.integers(2, 6)), int(rng.integers(2, 9))))
        value, w = solve_matrix_game(p)
        assert abs(np.sum(w) - 1.0) < 1e-10
        assert np.min(w) >= -1e-12
        # the mixture achieves its claimed guaranteed payoff on every column
        assert np.min(w @ p) >= value - 1e-9
        # and the value is not beatable: some column holds the row player there
        assert abs(np.min(w @ p) - value) < 1e-9


def test_game_determinism():
    rng = np.random.default_rng(19)
    p = rng.uniform(-1.0, 1.0, size=(4, 7))
    v1, w1 = solve_matrix_game(p)
    v2, w2 = solve_matrix_game(p)
    assert v1 == v2
    assert np.array_equal(w1, w2)
