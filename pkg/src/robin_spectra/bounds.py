"""Closed-form bounds, asymptotic series and explicit constants.

Everything here is a pure formula in double precision.  Square-root
differences that cancel catastrophically are evaluated through the
conjugate form ``X - sqrt(Y) = (X^2 - Y) / (X + sqrt(Y))``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .params import DomainError, check_index, check_positive, check_robin

PI = math.pi
PI2 = PI * PI

__all__ = [
    "TwoSidedBound",
    "SeriesEval",
    "Thresholds",
    "eig1_upper_simple",
    "eig1_bounds",
    "eig1_series_small_a",
    "eig1_series_large_alpha",
    "eig2_bounds",
    "eig2_upper_branches",
    "eig2_series_small_a",
    "eig2_series_large_alpha",
    "tan_envelope",
    "gap_lower_bound",
    "union_squares_bounds",
    "equal_squares_simple_upper",
    "counting_upper_bound",
    "thresholds",
    "unit_ball_volume",
    "envelope_constants",
    "optimal_union_series",
    "rectangle_value_bounds",
]


class TwoSidedBound(NamedTuple):
    lower: float
    upper: float

    def contains(self, value: float, tol: float = 0.0) -> bool:
        return self.lower - tol <= value <= self.upper + tol


@dataclass(frozen=True)
class SeriesEval:
    """Partial sum of an asymptotic series.

    ``order`` is the number of retained terms and ``truncation_power`` the
    power (of ``a`` or ``1/alpha`` or ``1/k``) carried by the first omitted
    term.  ``terms`` holds the individual retained terms.
    """

    value: float
    order: int
    truncation_power: int
    terms: tuple[float, ...]


def _check_order(order: int, max_order: int) -> int:
    if isinstance(order, bool) or not isinstance(order, int) or not 1 <= order <= max_order:
        raise DomainError(f"order must be an integer in 1..{max_order}, got {order!r}")
    return order


def _series(terms: list[float], order: int, first_power: int, step: int = 1) -> SeriesEval:
    kept = tuple(terms[:order])
    return SeriesEval(
        value=math.fsum(kept),
        order=order,
        truncation_power=first_power + step * order,
        terms=kept,
    )


# -- first eigenvalue of an interval ---------------------------------------


def eig1_upper_simple(a: float, alpha: float) -> float:
    """``2 alpha / a`` (from ``tan x >= x``)."""
    a = check_positive(a, "a")
    alpha = check_robin(alpha)
    return 2.0 * alpha / a


def eig1_bounds(a: float, alpha: float) -> TwoSidedBound:
    """Two-sided bound on the first Robin eigenvalue of an interval.

    Lower: ``2 alpha pi^2 / (a (pi^2 + 2 alpha a))``.
    Upper: ``(pi^2/a^2) (pi^2 + 2 a alpha - sqrt(64 a alpha + (pi^2 - 2 a alpha)^2)) / (2 (pi^2 - 8))``,
    the optimised Rayleigh quotient of ``1 - c cos(pi x / a)``.
    """
    a = check_positive(a, "a")
    alpha = check_robin(alpha)
    b = a * alpha
    lower = 2.0 * alpha * PI2 / (a * (PI2 + 2.0 * b))
    q = 2.0 * b
    root = math.sqrt(32.0 * q + (PI2 - q) ** 2)
    # conjugate form of (pi^2 + q - root) / (2 (pi^2 - 8)), exact algebraically
    upper = (PI2 / (a * a)) * 2.0 * q / (PI2 + q + root)
    return TwoSidedBound(lower, upper)


# coefficients of alpha^(n+1) a^(n-1), n = 0..4
_EIG1_SMALL_A = (2.0, -1.0 / 3.0, 2.0 / 45.0, -4.0 / 945.0, 2.0 / 1475.0)


def eig1_series_small_a(a: float, alpha: float, order: int = 5) -> SeriesEval:
    """Small-``a`` expansion of the first eigenvalue.

    ``2a/a - alpha^2/3 + (2 alpha^3/45) a - (4 alpha^4/945) a^2 + (2 alpha^5/1475) a^3``.
    The last coefficient is kept as given; see
    :func:`robin_spectra.verify.fit_eig1_cubic_coefficient` for a numerical
    fit of that coefficient.
    """
    a = check_positive(a, "a")
    alpha = check_robin(alpha)
    order = _check_order(order, 5)
    terms = [c * alpha ** (n + 1) * a ** (n - 1) for n, c in enumerate(_EIG1_SMALL_A)]
    return _series(terms, order, first_power=-1)


def eig1_series_large_alpha(a: float, alpha: float, order: int = 4) -> SeriesEval:
    """Large-``alpha`` expansion of the first eigenvalue (powers of ``1/alpha``)."""
    a = check_positive(a, "a")
    alpha = check_robin(alpha)
    order = _check_order(order, 4)
    terms = [
        PI2 / a**2,
        -4.0 * PI2 / (a**3 * alpha),
        12.0 * PI2 / (a**4 * alpha**2),
        -4.0 * PI2 * (24.0 - PI2) / (3.0 * a**5 * alpha**3),
    ]
    return _series(terms, order, first_power=0)


# -- second eigenvalue of an interval --------------------------------------


def eig2_upper_branches(a: float, alpha: float) -> tuple[float, float]:
    """Both upper bounds on the second eigenvalue, before the piecewise choice."""
    a = check_positive(a, "a")
    alpha = check_robin(alpha)
    b = a * alpha
    first = (PI / (2 * a) + math.sqrt(PI2 / (4 * a * a) + 2 * alpha / a)) ** 2
    second = PI2 / (16 * a**4 * alpha**2) * (4 * b - PI2 + math.sqrt(PI2 * PI2 + 16 * b * b)) ** 2
    return first, second


def eig2_bounds(a: float, alpha: float) -> TwoSidedBound:
    """Two-sided bound on the second Robin eigenvalue of an interval.

    The upper bound switches branch at ``a alpha = pi^2 / 2`` where both
    branches coincide.
    """
    a = check_positive(a, "a")
    alpha = check_robin(alpha)
    b = a * alpha
    # sqrt(4 pi^2 + 12 b pi + b^2) - b in conjugate form
    s = math.sqrt(4 * PI2 + 12 * b * PI + b * b)
    lower = ((2 * PI + (12 * b * PI + 4 * PI2) / (s + b)) / (4 * a)) ** 2
    first, second = eig2_upper_branches(a, alpha)
    upper = first if b <= PI2 / 2 else second
    return TwoSidedBound(lower, upper)


def eig2_series_small_a(a: float, alpha: float, order: int = 5) -> SeriesEval:
    """Small-``a`` expansion of the second eigenvalue (powers ``a^-2 .. a^2``)."""
    a = check_positive(a, "a")
    alpha = check_robin(alpha)
    order = _check_order(order, 5)
    terms = [
        PI2 / a**2,
        4.0 * alpha / a,
        -4.0 * alpha**2 / PI2,
        4.0 * (12.0 - PI2) * alpha**3 / (3.0 * PI2 * PI2) * a,
        -8.0 * (10.0 - PI2) * alpha**4 / PI2**3 * a**2,
    ]
    return _series(terms, order, first_power=-2)


def eig2_series_large_alpha(a: float, alpha: float, order: int = 5) -> SeriesEval:
    """Large-``alpha`` expansion of the second eigenvalue, coefficients as given.

    Only the first three terms agree with the true expansion; the
    ``alpha^-3`` and ``alpha^-4`` coefficients are kept verbatim and
    :func:`robin_spectra.verify.fit_eig2_large_alpha_coefficient` reports the
    numerically fitted ``alpha^-3`` coefficient next to the implemented one.
    """
    a = check_positive(a, "a")
    alpha = check_robin(alpha)
    order = _check_order(order, 5)
    terms = [
        4.0 * PI2 / a**2,
        -16.0 * PI2 / (alpha * a**3),
        48.0 * PI2 / (alpha**2 * a**4),
        -128.0 * PI2 / (alpha**3 * a**5),
        320.0 * PI2 / (alpha**4 * a**6),
    ]
    return _series(terms, order, first_power=0)


# -- auxiliary bounds -------------------------------------------------------


def tan_envelope(x: float) -> TwoSidedBound:
    """``8x/(pi^2-4x^2) <= tan x <= pi^2 x/(pi^2-4x^2)`` on ``(0, pi/2)``."""
    if not 0.0 < x < PI / 2:
        raise DomainError(f"x must lie in (0, pi/2), got {x!r}")
    d = PI2 - 4.0 * x * x
    return TwoSidedBound(8.0 * x / d, PI2 * x / d)


def gap_lower_bound(diameter: float) -> float:
    """Lower bound ``pi^2 / D^2`` on ``lambda_2 - lambda_1`` of an interval of length D."""
    d = check_positive(diameter, "D")
    return PI2 / (d * d)


def union_squares_bounds(k: int, area: float, alpha: float) -> TwoSidedBound:
    """Bounds on the k-th eigenvalue of k equal squares with total area ``area``."""
    k = check_index(k)
    area = check_positive(area, "A")
    alpha = check_robin(alpha)
    rk, ra = math.sqrt(k), math.sqrt(area)
    p = PI2 * rk
    q = 2.0 * alpha * ra
    lower = 4.0 * alpha * PI2 * k / (ra * (p + q))
    root = math.sqrt(32.0 * p * q / PI2 + (p - q) ** 2)
    upper = 4.0 * rk * p * q / (area * (p + q + root))
    return TwoSidedBound(lower, upper)


def equal_squares_simple_upper(k: int, area: float, alpha: float) -> float:
    """``4 sqrt(k) alpha / sqrt(A)``, the elementary upper bound for k equal squares."""
    k = check_index(k)
    area = check_positive(area, "A")
    alpha = check_robin(alpha)
    return 4.0 * math.sqrt(k) * alpha / math.sqrt(area)


def counting_upper_bound(aspect: float, area: float, lam: float) -> float:
    """Upper bound on the rectangle counting function, valid for every alpha >= 0.

    ``lam A / pi^2 + sqrt(lam A) (a + 1/a) / pi + 1``.
    """
    aspect = check_positive(aspect, "a")
    area = check_positive(area, "A")
    if not lam >= 0:
        raise DomainError(f"lambda must be >= 0, got {lam!r}")
    return lam * area / PI2 + math.sqrt(lam * area) * (aspect + 1.0 / aspect) / PI + 1.0


def rectangle_value_bounds(k: int, area: float, alpha: float) -> TwoSidedBound:
    """Two-sided bound on the optimal k-th eigenvalue among rectangles of area A.

    Lower ``3 pi^2 alpha^(2/3) (k-2)^(2/3) / (A^(2/3) (pi^2 + 2 sqrt(A) alpha)^(2/3))``,
    upper ``3 pi^(2/3) alpha^(2/3) k^(2/3) / A^(2/3)``.  The lower bound is
    only claimed when ``alpha <= thresholds(k, A).rect_C3 * sqrt(k)``.
    """
    k = check_index(k)
    area = check_positive(area, "A")
    alpha = check_robin(alpha)
    lower = (
        3.0 * PI2 * alpha ** (2 / 3) * max(k - 2, 0) ** (2 / 3)
        / (area ** (2 / 3) * (PI2 + 2.0 * math.sqrt(area) * alpha) ** (2 / 3))
    )
    upper = 3.0 * PI ** (2 / 3) * alpha ** (2 / 3) * k ** (2 / 3) / area ** (2 / 3)
    return TwoSidedBound(lower, upper)


class Thresholds(NamedTuple):
    alpha_sufficient: float
    alpha_sufficient_coeff: float
    k_star_coeff: float
    rect_C3: float


def thresholds(k: int, area: float) -> Thresholds:
    """Explicit constants delimiting the equal-squares and rectangle regimes.

    ``alpha_sufficient``: below it, k equal squares beat every union of
    rectangles; ``k_star_coeff``: the equivalent condition reads
    ``k >= k_star_coeff * A * alpha^2``; ``rect_C3``: the rectangle two-sided
    bound holds for ``alpha <= rect_C3 * sqrt(k)``.
    """
    k = check_index(k)
    area = check_positive(area, "A")
    coeff = PI2 / 18.0 * (7.0 - 2.0 * math.sqrt(10.0))
    return Thresholds(
        alpha_sufficient=coeff * math.sqrt(k / area),
        alpha_sufficient_coeff=coeff,
        k_star_coeff=(18.0 / (7.0 - 2.0 * math.sqrt(10.0))) ** 2 / PI2**2,
        rect_C3=PI2 / math.sqrt(18.0**3) / math.sqrt(area),
    )


def unit_ball_volume(d: int) -> float:
    """Volume of the unit ball in ``R^d``."""
    d = check_index(d, "d")
    return PI ** (d / 2) / math.gamma(d / 2 + 1)


def envelope_constants(d: int) -> tuple[float, float]:
    """Large-k envelope constants for the equal-cube regime in dimension d.

    Returns ``(upper_regime, lower_regime)``: above ``upper_regime * (k/V)^(1/d)``
    equal cubes are no longer optimal; below ``lower_regime * (k/V)^(1/d)``
    they beat any fixed domain.
    """
    d = check_index(d, "d")
    if d < 2:
        raise DomainError(f"dimension must be >= 2, got {d}")
    s = d * unit_ball_volume(d) ** (2.0 / d)
    upper = 2.0 * PI2 / (s - 4.0)
    lower = 2.0 / s * (PI2 + 32.0 / (s - 4.0))
    return upper, lower


def optimal_union_series(k: int, area: float, alpha: float, order: int = 5) -> SeriesEval:
    """Large-k expansion of the optimal k-th eigenvalue over unions of rectangles.

    Equal to twice the small-``a`` series of the first interval eigenvalue at
    ``a = sqrt(A/k)``; ``truncation_power`` counts powers of ``k^(-1/2)``.
    """
    k = check_index(k)
    area = check_positive(area, "A")
    alpha = check_robin(alpha)
    order = _check_order(order, 5)
    a = math.sqrt(area / k)
    terms = [2.0 * c * alpha ** (n + 1) * a ** (n - 1) for n, c in enumerate(_EIG1_SMALL_A)]
    return _series(terms, order, first_power=-1)
