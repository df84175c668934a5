import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import neumann_lattice_count, richardson_interval_eigenvalues
from robin_spectra import DomainError
from robin_spectra.bounds import (
    counting_upper_bound,
    eig1_bounds,
    eig1_series_large_alpha,
    eig1_series_small_a,
    eig1_upper_simple,
    eig2_bounds,
    eig2_series_large_alpha,
    eig2_series_small_a,
    eig2_upper_branches,
    envelope_constants,
    equal_squares_simple_upper,
    gap_lower_bound,
    optimal_union_series,
    rectangle_value_bounds,
    tan_envelope,
    thresholds,
    unit_ball_volume,
    union_squares_bounds,
)
from robin_spectra.interval import interval_eigenvalue
from robin_spectra.rectangles import RectSpec, equal_squares_eigenvalue, rect_counting

PI2 = math.pi**2
pos = st.floats(0.01, 100.0)

# frozen from the Richardson finite-difference oracle
LAMBDA1_SMALL_A = 199.66711068797227  # a = 0.01, alpha = 1
LAMBDA2_SMALL_A = 99095.6390176585  # a = 0.01, alpha = 1
LAMBDA1_ALPHA100 = 9.486473204354672  # a = 1, alpha = 100
EQUAL_SQUARES_4_4_1 = 3.4141059511  # k = 4, A = 4, alpha = 1


def test_frozen_oracle_values_are_current():
    assert richardson_interval_eigenvalues(0.01, 1.0, 1)[0] == pytest.approx(LAMBDA1_SMALL_A, rel=1e-10)
    assert 2 * richardson_interval_eigenvalues(1.0, 1.0, 1)[0] == pytest.approx(EQUAL_SQUARES_4_4_1, rel=1e-10)


def test_eig1_upper_simple():
    assert eig1_upper_simple(1, 1) == 2.0
    assert eig1_upper_simple(2, 1) == 1.0
    with pytest.raises(DomainError):
        eig1_upper_simple(0, 1)
    with pytest.raises(DomainError):
        eig1_upper_simple(1, 0)


def test_eig1_bounds_unit():
    b = eig1_bounds(1, 1)
    assert b.lower == pytest.approx(2 * PI2 / (PI2 + 2), rel=1e-14)
    assert b.lower == pytest.approx(1.6630, abs=1e-4)
    # the closed form evaluates to 1.70965
    assert b.upper == pytest.approx((PI2 + 2 - math.sqrt(64 + (PI2 - 2) ** 2)) * PI2 / (2 * (PI2 - 8)), rel=1e-12)
    assert b.contains(interval_eigenvalue(1, 1, 1))


def test_eig1_lower_small_a_limit():
    a = 1e-8
    assert eig1_bounds(a, 1).lower * a / 2 == pytest.approx(1.0, rel=1e-6)


def test_eig1_series_examples():
    s = eig1_series_small_a(0.01, 1, 2)
    assert s.value == pytest.approx(199.6667, abs=5e-4)
    assert s.value == pytest.approx(LAMBDA1_SMALL_A, abs=5e-3)
    assert eig1_series_small_a(0.3, 2.5, 1).value == pytest.approx(2 * 2.5 / 0.3)
    assert s.order == 2 and s.truncation_power == 1
    assert eig1_series_large_alpha(1, 1e12, 1).value == pytest.approx(PI2)
    assert eig1_series_large_alpha(1, 100, 2).value == pytest.approx(PI2 - 4 * PI2 / 100, rel=1e-14)
    assert eig1_series_large_alpha(1, 100, 2).value == pytest.approx(9.4748, abs=1e-4)
    assert eig1_series_large_alpha(1, 100, 4).value == pytest.approx(LAMBDA1_ALPHA100, abs=1e-5)  # next term is O(alpha^-4)
    with pytest.raises(DomainError):
        eig1_series_small_a(1, 1, 6)
    with pytest.raises(DomainError):
        eig1_series_large_alpha(1, 1, 5)


def test_eig1_small_a_cubic_coefficient_as_implemented():
    s = eig1_series_small_a(0.5, 1.0, 5)
    assert s.terms[4] == pytest.approx(2 / 1475 * 0.5**3)


def test_eig2_bounds_unit():
    b = eig2_bounds(1, 1)
    assert b.contains(interval_eigenvalue(1, 1, 2))
    lower = ((2 * math.pi - 1 + math.sqrt(4 * PI2 + 12 * math.pi + 1)) / 4) ** 2
    assert b.lower == pytest.approx(lower, rel=1e-13)


@pytest.mark.parametrize("a", [0.1, 1.0, 7.0])
def test_eig2_upper_seam(a):
    alpha = PI2 / 2 / a
    first, second = eig2_upper_branches(a, alpha)
    assert abs(first - second) <= 1e-12 * first


def test_eig2_upper_small_a_limit():
    a = 1e-7
    assert eig2_bounds(a, 1).upper / (PI2 / a**2) == pytest.approx(1.0, rel=1e-5)


def test_eig2_series_examples():
    assert eig2_series_small_a(0.2, 3.0, 1).value == pytest.approx(PI2 / 0.04)
    assert eig2_series_small_a(0.01, 1, 3).value == pytest.approx(LAMBDA2_SMALL_A, abs=1e-2)
    a = 0.7
    s = eig2_series_small_a(a, math.pi, 3)
    assert s.terms[1] + s.terms[2] == pytest.approx(4 * math.pi / a - 4, rel=1e-14)
    assert eig2_series_large_alpha(1, 1e12, 1).value == pytest.approx(4 * PI2)
    s = eig2_series_large_alpha(1, 100, 5)
    expect = [4 * PI2, -16 * PI2 / 100, 48 * PI2 / 1e4, -128 * PI2 / 1e6, 320 * PI2 / 1e8]
    np.testing.assert_allclose(s.terms, expect, rtol=1e-14)
    # three correct terms; the omitted alpha^-3 term is about 8e-4 here
    assert eig2_series_large_alpha(1, 100, 3).value == pytest.approx(interval_eigenvalue(1, 100, 2), abs=2e-3)


def test_tan_envelope():
    b = tan_envelope(math.pi / 4)
    assert b.lower == pytest.approx(8 / (3 * math.pi), rel=1e-14)
    assert b.upper == pytest.approx(math.pi / 3, rel=1e-14)
    assert b.contains(1.0)
    tiny = tan_envelope(1e-9)
    assert tiny.lower / 1e-9 == pytest.approx(8 / PI2)
    assert tiny.upper / 1e-9 == pytest.approx(1.0)
    xs = np.linspace(1e-6, math.pi / 2 - 1e-6, 2001)
    for x in xs:
        assert tan_envelope(x).contains(math.tan(x), tol=1e-12 * math.tan(x))
    for bad in (0.0, math.pi / 2, -1.0):
        with pytest.raises(DomainError):
            tan_envelope(bad)


def test_gap_lower_bound():
    assert gap_lower_bound(math.pi) == pytest.approx(1.0)
    assert gap_lower_bound(1) == pytest.approx(PI2)
    assert interval_eigenvalue(1, 1, 2) - interval_eigenvalue(1, 1, 1) >= gap_lower_bound(1)


def test_union_squares_bounds_example():
    b = union_squares_bounds(4, 4, 1)
    assert b.lower == pytest.approx(4 * PI2 * 4 / (2 * (PI2 * 2 + 4)), rel=1e-14)
    assert b.contains(equal_squares_eigenvalue(4, 4, 1))
    assert equal_squares_eigenvalue(4, 4, 1) == pytest.approx(EQUAL_SQUARES_4_4_1, rel=1e-10)
    assert equal_squares_simple_upper(4, 4, 1) == 4.0
    assert equal_squares_eigenvalue(4, 4, 1) <= 4.0
    k = 10**12
    assert union_squares_bounds(k, 1, 1).lower / math.sqrt(k) == pytest.approx(4.0, rel=1e-5)


def test_counting_upper_bound_examples():
    assert counting_upper_bound(1, 1, PI2) == pytest.approx(4.0)
    assert neumann_lattice_count(1, 1, PI2) == 3
    assert rect_counting(RectSpec(1, 1), 0.0, PI2) == 3
    vals = [counting_upper_bound(a, 1, 50.0) for a in np.linspace(1, 5, 20)]
    assert all(np.diff(vals) > 0)


def test_thresholds():
    t = thresholds(3, 1)
    assert t.alpha_sufficient_coeff == pytest.approx(0.370, abs=5e-4)
    assert t.k_star_coeff == pytest.approx(7.291, abs=5e-4)
    assert t.alpha_sufficient == pytest.approx(0.641, abs=5e-4)
    assert t.rect_C3 == pytest.approx(PI2 / math.sqrt(18**3))


def test_envelope_constants():
    up, lo = envelope_constants(2)
    assert up == pytest.approx(PI2 / (math.pi - 2), rel=1e-14)
    assert lo == pytest.approx(math.pi + 16 / (math.pi * (math.pi - 2)), rel=1e-14)
    assert up == pytest.approx(8.64547, abs=1e-5)
    assert lo == pytest.approx(7.60287, abs=1e-5)
    assert unit_ball_volume(2) == pytest.approx(math.pi)
    assert unit_ball_volume(3) == pytest.approx(4 * math.pi / 3)
    with pytest.raises(DomainError):
        envelope_constants(1)


def test_optimal_union_series():
    assert optimal_union_series(10**4, 1, 1, 1).value == pytest.approx(400.0)
    for k, area, alpha in [(50, 2.0, 0.7), (10**4, 1, 1)]:
        a = math.sqrt(area / k)
        assert optimal_union_series(k, area, alpha).value == pytest.approx(2 * eig1_series_small_a(a, alpha).value, rel=1e-14)
    k = 10**4
    assert abs(optimal_union_series(k, 1, 1).value - equal_squares_eigenvalue(k, 1, 1)) < 1e-6


def test_optimal_union_series_two_term_slope():
    ks = np.array([1e2, 1e3, 1e4, 1e5, 1e6])
    err = [abs(optimal_union_series(int(k), 1, 1, 2).value - equal_squares_eigenvalue(int(k), 1, 1)) for k in ks]
    slope = np.polyfit(np.log(ks), np.log(err), 1)[0]
    assert -0.7 <= slope <= -0.3


def test_rectangle_value_bounds_shape():
    b = rectangle_value_bounds(10, 1, 1)
    assert b.upper == pytest.approx(3 * math.pi ** (2 / 3) * 10 ** (2 / 3))
    assert 0 < b.lower < b.upper


@settings(max_examples=300, deadline=None)
@given(pos, pos)
def test_interval_sandwiches(a, alpha):
    b1 = eig1_bounds(a, alpha)
    b2 = eig2_bounds(a, alpha)
    l1 = interval_eigenvalue(a, alpha, 1)
    l2 = interval_eigenvalue(a, alpha, 2)
    assert b1.lower <= b1.upper and b2.lower <= b2.upper
    assert b1.contains(l1, tol=1e-10 * l1)
    assert b2.contains(l2, tol=1e-10 * l2)
    assert l1 <= eig1_upper_simple(a, alpha) * (1 + 1e-12)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 400), st.floats(0.1, 10.0), pos)
def test_union_squares_sandwich(k, area, alpha):
    b = union_squares_bounds(k, area, alpha)
    v = equal_squares_eigenvalue(k, area, alpha)
    assert b.lower <= b.upper
    assert b.contains(v, tol=1e-10 * v)


@settings(max_examples=200, deadline=None)
@given(st.floats(1.0, 6.0), st.floats(0.1, 10.0), st.floats(0.0, 400.0), st.one_of(st.just(0.0), pos, st.just("dirichlet")))
def test_counting_bound_dominates_exact_count(aspect, area, lam, alpha):
    if lam == 0.0 and alpha != 0.0:
        return
    n = rect_counting(RectSpec(area, aspect), alpha, lam)
    assert n <= counting_upper_bound(aspect, area, lam) + 1e-9
