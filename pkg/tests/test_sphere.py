"""Tests for sphere distance-graph bounds.

Eigenvalues are cross-checked against two independent routes: the Legendre
recurrence for S^2 and the cosine closed form for the circle.  The tight
simplex case t = -1/3 on S^2 pins the bound values exactly.
"""

import math

import numpy as np
import pytest

from hoffman.errors import UncertifiedRangeError, VacuousBoundError
from hoffman.reports import KIND_ALPHA_RATIO_UB, KIND_CHI_LB
from hoffman.sphere import (
    EigenSequence,
    SphereMeasure,
    eigenvalue_sequence,
    operator_range,
    optimize_sphere_measure,
    single_t_bounds,
    sphere_measure_from_json,
    sphere_measure_to_json,
)

from oracles import chebyshev_value, legendre_sequence


def test_measure_validation():
    with pytest.raises(ValueError):
        SphereMeasure(1, ((0.0, 1.0),))
    with pytest.raises(ValueError):
        SphereMeasure(65, ((0.0, 1.0),))
    with pytest.raises(ValueError):
        SphereMeasure(3, ((1.0, 1.0),))  # t = 1 means self-adjacency
    with pytest.raises(ValueError):
        SphereMeasure(3, ((-1.001, 1.0),))
    with pytest.raises(ValueError):
        SphereMeasure(3, ((0.5, 1.0), (0.5, 2.0)))
    with pytest.raises(ValueError):
        SphereMeasure(3, ((0.5, 1.0), (0.2, 2.0)))
    with pytest.raises(ValueError):
        SphereMeasure(3, ((float("nan"), 1.0),))
    empty = SphereMeasure(3, ())
    assert empty.is_zero() and empty.total_mass() == 0.0


def test_measure_json_round_trip():
    mu = SphereMeasure(4, ((-0.5, 1.0), (0.25, -2.0)))
    again = sphere_measure_from_json(sphere_measure_to_json(mu))
    assert again == mu
    with pytest.raises(ValueError):
        sphere_measure_from_json({"dim": 3, "atoms": [[0.0, 1.0]], "extra": 1})
    with pytest.raises(ValueError):
        sphere_measure_from_json({"dim": 3, "atoms": [[0.0]]})
    with pytest.raises(ValueError):
        sphere_measure_from_json([3, [[0.0, 1.0]]])


def test_eigenvalue_trivial_degrees():
    # degree 0 is the total mass and degree 1 is the first moment in any dim
    rng = np.random.default_rng(3)
    for n in (2, 3, 5, 10):
        ts = np.sort(rng.uniform(-1.0, 0.99, size=3))
        ws = rng.uniform(-2.0, 2.0, size=3)
        mu = SphereMeasure(n, tuple(zip(ts, ws)))
        seq = eigenvalue_sequence(mu, 8)
        assert seq.values[0] == mu.total_mass()
        assert abs(seq.values[1] - float(ts @ ws)) < 1e-13


def test_eigenvalue_legendre_oracle():
    rng = np.random.default_rng(11)
    ts = np.sort(rng.uniform(-1.0, 0.99, size=4))
    ws = rng.uniform(-1.0, 1.0, size=4)
    mu = SphereMeasure(3, tuple(zip(ts, ws)))
    seq = eigenvalue_sequence(mu, 40)
    for k in range(41):
        want = sum(w * legendre_sequence(k, t)[k] for t, w in zip(ts, ws))
        assert abs(seq.values[k] - want) < 1e-12


def test_eigenvalue_circle_matches_cosines():
    # the Jacobi route at parameter -1/2 must agree with cos(k theta)
    rng = np.random.default_rng(19)
    worst = 0.0
    for _ in range(50):
        m = int(rng.integers(1, 5))
        ts = np.sort(rng.uniform(-1.0, 0.999, size=m))
        ws = rng.uniform(-1.0, 1.0, size=m)
        mu = SphereMeasure(2, tuple(zip(ts, ws)))
        seq = eigenvalue_sequence(mu, 30)
        for k in range(31):
            want = sum(w * chebyshev_value(k, t) for t, w in zip(ts, ws))
            worst = max(worst, abs(seq.values[k] - want))
    assert worst < 1e-9


def test_eigenvalue_bounded_by_total_variation():
    rng = np.random.default_rng(23)
    for n in (2, 3, 4, 8):
        ts = np.sort(rng.uniform(-1.0, 0.99, size=5))
        ws = rng.uniform(-3.0, 3.0, size=5)
        mu = SphereMeasure(n, tuple(zip(ts, ws)))
        seq = eigenvalue_sequence(mu, 200)
        assert np.max(np.abs(seq.values)) <= np.sum(np.abs(ws)) + 1e-10


def test_eigenvalue_sequence_validation():
    mu = SphereMeasure(3, ((0.0, 1.0),))
    with pytest.raises(ValueError):
        eigenvalue_sequence(mu, 0)
    with pytest.raises(ValueError):
        eigenvalue_sequence(mu, 10_001)
    zero = eigenvalue_sequence(SphereMeasure(3, ()), 5)
    assert np.all(zero.values == 0.0) and zero.tail_bound == 0.0


def test_tail_probe_is_max_over_next_window():
    mu = SphereMeasure(4, ((-0.7, 0.5), (0.3, 0.5)))
    K = 16
    seq = eigenvalue_sequence(mu, K)
    longer = eigenvalue_sequence(mu, 2 * K)
    assert seq.tail_bound == pytest.approx(
        float(np.max(np.abs(longer.values[K + 1 :]))), abs=1e-15
    )
    assert isinstance(seq, EigenSequence) and seq.K == K


def test_operator_range_tight_simplex_case():
    m, M = operator_range(SphereMeasure(3, ((-1.0 / 3.0, 1.0),)))
    assert abs(m + 1.0 / 3.0) < 1e-10
    assert M == 1.0


def test_operator_range_circle_rational_angles():
    # theta = pi/2: eigenvalues cycle through 1, 0, -1, 0 exactly
    m, M = operator_range(SphereMeasure(2, ((0.0, 1.0),)))
    assert m == -1.0 and M == 1.0
    # theta = 2 pi / 3 gives the triangle: minimum -1/2
    m, M = operator_range(SphereMeasure(2, ((-0.5, 1.0),)))
    assert abs(m + 0.5) < 1e-12 and M == 1.0


def test_operator_range_circle_irrational_angle():
    # cos(k) equidistributes, so the scan approaches -1 from above
    m, M = operator_range(SphereMeasure(2, ((math.cos(1.0), 1.0),)))
    assert -1.0 - 1e-12 <= m < -0.999
    assert M == 1.0


def test_operator_range_zero_measure():
    assert operator_range(SphereMeasure(3, ())) == (0.0, 0.0)
    assert operator_range(SphereMeasure(3, ((0.3, 0.0),))) == (0.0, 0.0)


def test_operator_range_contains_zero_in_high_dims():
    # eigenvalues decay, so 0 is always a limit point for n >= 3
    rng = np.random.default_rng(29)
    for _ in range(10):
        n = int(rng.integers(3, 9))
        k = int(rng.integers(1, 4))
        ts = np.sort(rng.uniform(-1.0, 0.9, size=k))
        ws = rng.uniform(-1.0, 1.0, size=k)
        m, M = operator_range(SphereMeasure(n, tuple(zip(ts, ws))))
        assert m <= 0.0 <= M


def test_operator_range_start_truncation_irrelevant():
    rng = np.random.default_rng(7)
    for _ in range(12):
        n = int(rng.integers(3, 7))
        k = int(rng.integers(1, 4))
        ts = np.sort(rng.uniform(-1.0, 0.9, size=k))
        ws = rng.uniform(-1.0, 1.0, size=k)
        mu = SphereMeasure(n, tuple(zip(ts, ws)))
        assert operator_range(mu, K=1) == operator_range(mu, K=64)


def test_operator_range_tol_domain():
    mu = SphereMeasure(3, ((0.0, 1.0),))
    with pytest.raises(ValueError):
        operator_range(mu, tol=1e-13)
    with pytest.raises(ValueError):
        operator_range(mu, tol=1e-2)
    with pytest.raises(ValueError):
        operator_range(mu, K=0)


def test_single_t_tight_case():
    alpha, chi = single_t_bounds(3, -1.0 / 3.0)
    assert alpha.kind == KIND_ALPHA_RATIO_UB and chi.kind == KIND_CHI_LB
    assert abs(alpha.value - 0.25) < 1e-10
    assert abs(chi.value - 4.0) < 1e-10
    assert alpha.R == 1.0 and alpha.epsilon == 0.0


def test_single_t_product_identity():
    rng = np.random.default_rng(41)
    for _ in range(25):
        n = int(rng.integers(2, 9))
        t = float(rng.uniform(-1.0, 0.9))
        alpha, chi = single_t_bounds(n, t)
        assert abs(alpha.value * chi.value - 1.0) < 1e-12


def test_single_t_domain():
    with pytest.raises(ValueError):
        single_t_bounds(3, 1.0)
    alpha, chi = single_t_bounds(3, -1.0)  # antipodal pairs: bipartite-like
    assert abs(chi.value - 2.0) < 1e-12


def test_optimize_single_point_support():
    mu, rep = optimize_sphere_measure(3, [-1.0 / 3.0])
    assert mu.atoms == ((-1.0 / 3.0, 1.0),)
    assert abs(rep.value - 4.0) < 1e-9


def test_optimize_circle_supports():
    _, rep = optimize_sphere_measure(2, [0.0])
    assert abs(rep.value - 2.0) < 1e-9
    _, rep = optimize_sphere_measure(2, [-0.5])
    assert abs(rep.value - 3.0) < 1e-9


def test_optimize_monotone_in_support():
    _, r1 = optimize_sphere_measure(3, [-1.0 / 3.0])
    _, r2 = optimize_sphere_measure(3, [-1.0 / 3.0, -0.8])
    _, r3 = optimize_sphere_measure(3, [-1.0 / 3.0, -0.8, 0.2])
    assert r2.value >= r1.value - 1e-8
    assert r3.value >= r2.value - 1e-8
    assert r3.value > 6.0  # strict gain over the single-point bound


def test_optimize_weights_form_probability_measure():
    mu, _ = optimize_sphere_measure(3, [-1.0 / 3.0, -0.8, 0.2])
    w = mu.weights()
    assert np.all(w >= -1e-12)
    assert abs(float(np.sum(w)) - 1.0) < 1e-9


def test_optimize_vacuous_truncation():
    # one positive row forces a nonnegative game value
    with pytest.raises(VacuousBoundError):
        optimize_sphere_measure(3, [0.9], K=1)


def test_optimize_validation():
    with pytest.raises(ValueError):
        optimize_sphere_measure(3, [])
    with pytest.raises(ValueError):
        optimize_sphere_measure(3, [0.2, 0.2])
    with pytest.raises(ValueError):
        optimize_sphere_measure(3, [1.0])


def test_optimize_deterministic():
    a = optimize_sphere_measure(3, [-1.0 / 3.0, -0.8, 0.2])
    b = optimize_sphere_measure(3, [-1.0 / 3.0, -0.8, 0.2])
    assert a[0] == b[0] and a[1].value == b[1].value


def test_uncertified_error_carries_partial_range():
    err = UncertifiedRangeError("probe too large", -0.4, 0.9, 128, 0.5)
    assert err.range == (-0.4, 0.9)
    assert err.k_used == 128 and err.tail_bound == 0.5
    assert "probe too large" in str(err)
