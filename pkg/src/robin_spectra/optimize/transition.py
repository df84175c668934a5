"""The curve where k equal squares tie with k-3 equal squares plus one triple square."""
from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.optimize import brentq

from ..interval import interval_eigenvalue
from ..params import AlphaLike, DomainError, as_boundary, check_index, check_positive
from ..rectangles import RectSpec, UnionSpec, equal_squares_eigenvalue, rect_eigenvalue, union_eigenvalue

__all__ = [
    "TransitionSolution",
    "CrossingCheck",
    "ThreeMergeCandidate",
    "solve_transition",
    "transition_crossing_check",
    "three_merge_candidate",
]

SQ3 = math.sqrt(3.0)
SHRINK = 1e-12


@dataclass(frozen=True)
class TransitionSolution:
    c1: float
    c2: float
    c3: float
    C: float
    residuals: tuple[float, float, float]

    def alpha(self, k: int, area: float) -> float:
        """Boundary coefficient on the curve: ``C sqrt(k / A)``."""
        return self.C * math.sqrt(k / area)

    def to_json(self) -> dict:
        return {"c1": self.c1, "c2": self.c2, "c3": self.c3, "C": self.C, "residuals": list(self.residuals)}


def _c2(c1: float) -> float:
    lhs = c1 * math.tan(c1)
    hi = math.pi / (2 * SQ3)
    return brentq(lambda c: c * math.tan(SQ3 * c) - lhs, SHRINK, hi - SHRINK, xtol=1e-15, rtol=1e-15)


def _c3(c1: float) -> float:
    lhs = c1 * math.tan(c1)
    lo, hi = math.pi / (2 * SQ3), math.pi / SQ3
    return brentq(lambda c: -c / math.tan(SQ3 * c) - lhs, lo + SHRINK, hi - SHRINK, xtol=1e-15, rtol=1e-15)


def _residuals(c1: float, c2: float, c3: float) -> tuple[float, float, float]:
    t = c1 * math.tan(c1)
    return (
        t - c2 * math.tan(SQ3 * c2),
        t + c3 / math.tan(SQ3 * c3),
        2 * c1 * c1 - c2 * c2 - c3 * c3,
    )


def solve_transition(tol: float = 1e-15) -> TransitionSolution:
    """Solve for ``(c1, c2, c3)`` and ``C = 2 c1 tan(c1)`` by bisection on ``2c1^2 - c2^2 - c3^2``."""
    def f(c1: float) -> float:
        return 2 * c1 * c1 - _c2(c1) ** 2 - _c3(c1) ** 2

    # outer bracket kept away from the ends so the inner roots stay inside their shrunk intervals
    lo, hi = 1e-3, math.pi / 2 - 1e-3
    f_lo, f_hi = f(lo), f(hi)
    if not (f_lo < 0 < f_hi):
        raise AssertionError(f"transition bracket failure: F({lo})={f_lo}, F({hi})={f_hi}")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if f(mid) < 0:
            lo = mid
        else:
            hi = mid
    c1 = 0.5 * (lo + hi)
    c2, c3 = _c2(c1), _c3(c1)
    return TransitionSolution(c1, c2, c3, 2 * c1 * math.tan(c1), _residuals(c1, c2, c3))


@dataclass(frozen=True)
class ThreeMergeCandidate:
    union: UnionSpec
    big_fraction: float
    value: float


def three_merge_candidate(k: int, area: float, alpha: AlphaLike) -> ThreeMergeCandidate:
    """k-3 equal small squares and one large square, area split so that
    the large square's third eigenvalue equals the small squares' first."""
    k = check_index(k)
    if k < 3:
        raise DomainError(f"the three-merge candidate needs k >= 3, got {k}")
    area = check_positive(area, "area")
    bc = as_boundary(alpha)
    if k == 3:
        union = UnionSpec((RectSpec(area, 1.0),))
        return ThreeMergeCandidate(union, 1.0, union_eigenvalue(union, bc, 3).value)

    def diff(s: float) -> float:
        big = rect_eigenvalue(RectSpec(s * area, 1.0), bc, 3).value
        small = 2.0 * interval_eigenvalue(math.sqrt((1 - s) * area / (k - 3)), bc, 1)
        return math.log(big) - math.log(small)

    s = brentq(diff, 1e-12, 1 - 1e-12, xtol=1e-15, rtol=1e-15)
    small = RectSpec((1 - s) * area / (k - 3), 1.0)
    union = UnionSpec((small,) * (k - 3) + (RectSpec(s * area, 1.0),))
    return ThreeMergeCandidate(union, s, union_eigenvalue(union, bc, k).value)


@dataclass(frozen=True)
class CrossingCheck:
    k: int
    area: float
    alpha: float
    lambda1_small: float
    lambda2_big: float
    lambda3_big: float
    crossing_residual: float
    degeneracy_residual: float

    def to_json(self) -> dict:
        return dict(self.__dict__)


def transition_crossing_check(k: int, area: float, solution: TransitionSolution | None = None) -> CrossingCheck:
    """Evaluate the defining identity at ``alpha = C sqrt(k/A)``.

    ``crossing_residual`` is the relative gap between the first eigenvalue of
    a square of area ``A/k`` and the second of a square of area ``3A/k``;
    ``degeneracy_residual`` the relative gap between the large square's
    second and third eigenvalues.
    """
    k = check_index(k)
    area = check_positive(area, "area")
    sol = solution or solve_transition()
    alpha = sol.alpha(k, area)
    l1 = equal_squares_eigenvalue(k, area, alpha)
    big = RectSpec(3 * area / k, 1.0)
    l2 = rect_eigenvalue(big, alpha, 2).value
    l3 = rect_eigenvalue(big, alpha, 3).value
    return CrossingCheck(k, area, alpha, l1, l2, l3, abs(l1 - l2) / l1, abs(l2 - l3) / l2)
