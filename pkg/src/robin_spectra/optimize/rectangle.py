"""Minimisation of the k-th eigenvalue over rectangles of fixed area."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..params import AlphaLike, BoundaryParam, DomainError, as_boundary, check_index, check_positive
from ..rectangles import ModeIndex, RectSpec, rect_eigenvalue, rect_kth_value, rect_kth_values

__all__ = ["RectOptResult", "optimize_rectangle", "aspect_search_limit", "rect_objective"]

GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0
TABLE_K_MAX = 1000


@dataclass(frozen=True)
class RectOptResult:
    k: int
    area: float
    alpha: BoundaryParam
    aspect_star: float
    value: float
    mode: ModeIndex
    bracket: tuple[float, float]

    @property
    def rect(self) -> RectSpec:
        return RectSpec(self.area, self.aspect_star)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "A": self.area,
            "alpha": self.alpha.to_json(),
            "aspect_star": self.aspect_star,
            "value": self.value,
            "mode": [self.mode.i, self.mode.j],
            "bracket": list(self.bracket),
        }


def aspect_search_limit(k: int, area: float, bc: BoundaryParam) -> float:
    """``max(2 sqrt(k), 4 c2 k^(2/3))`` with ``c2 = (sqrt(A) alpha / (pi^2 + 2 sqrt(A) alpha))^(-1/3)``."""
    if bc.is_dirichlet:
        c2 = 2.0 ** (1.0 / 3.0)
    else:
        s = math.sqrt(area) * bc.value
        c2 = (s / (math.pi**2 + 2.0 * s)) ** (-1.0 / 3.0)
    return max(2.0 * math.sqrt(k), 4.0 * c2 * k ** (2.0 / 3.0))


def rect_objective(k: int, area: float, alpha: float):
    """Vectorised ``a -> lambda_k(R_a)`` choosing the mode table or counting route by k."""
    if k <= TABLE_K_MAX:
        return lambda a: rect_kth_values(area, a, alpha, k)
    return lambda a: np.array([rect_kth_value(area, float(x), alpha, k) for x in np.atleast_1d(a)])


def _golden(f, lo: float, hi: float, rtol: float) -> tuple[float, float]:
    c = hi - GOLDEN * (hi - lo)
    d = lo + GOLDEN * (hi - lo)
    fc, fd = f(c), f(d)
    while hi - lo > rtol * lo:
        if fc <= fd:
            hi, d, fd = d, c, fc
            c = hi - GOLDEN * (hi - lo)
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + GOLDEN * (hi - lo)
            fd = f(d)
    return (c, fc) if fc <= fd else (d, fd)


def _local_minima(values: np.ndarray) -> np.ndarray:
    n = values.size
    left = np.r_[np.inf, values[:-1]]
    right = np.r_[values[1:], np.inf]
    idx = np.flatnonzero((values <= left) & (values <= right))
    return idx[np.argsort(values[idx], kind="stable")] if n else idx


def optimize_rectangle(
    k: int,
    area: float,
    alpha: AlphaLike,
    grid_points: int = 512,
    rtol: float = 1e-8,
    starts: int = 8,
) -> RectOptResult:
    """Minimise ``a -> lambda_k(R_a)`` over ``a in [1, a_max]``.

    A geometric grid isolates candidate basins; golden-section search then
    refines the ``starts`` best local grid minima.  Among (numerically)
    equal minima the smallest aspect is returned.
    """
    k = check_index(k)
    area = check_positive(area, "area")
    bc = as_boundary(alpha)
    if bc.is_neumann:
        raise DomainError("alpha = 0 admits no rectangle minimiser: lambda_k(R_a) decreases to 0 as a grows")
    if grid_points < 3:
        raise DomainError("grid_points must be >= 3")
    a_max = aspect_search_limit(k, area, bc)
    grid = np.geomspace(1.0, a_max, grid_points)
    f_vec = rect_objective(k, area, bc.alpha)
    vals = f_vec(grid)

    def f(a: float) -> float:
        return float(f_vec(np.array([a]))[0])

    candidates = []
    for i in _local_minima(vals)[:starts]:
        lo, hi = grid[max(i - 1, 0)], grid[min(i + 1, grid_points - 1)]
        a, v = _golden(f, lo, hi, rtol)
        candidates.append((a, v, (float(lo), float(hi))))
        candidates.append((float(grid[i]), float(vals[i]), (float(lo), float(hi))))
    best_v = min(v for _, v, _ in candidates)
    tol = 1e-13 * abs(best_v)
    a_star, v_star, bracket = min((c for c in candidates if c[1] <= best_v + tol), key=lambda c: c[0])
    rect = RectSpec(area, a_star)
    mode = rect_eigenvalue(rect, bc, k).mode
    return RectOptResult(k, area, bc, float(a_star), float(v_star), mode, bracket)
