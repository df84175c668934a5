"""Parameter sweeps built on the optimisers."""
from __future__ import annotations

import math
from dataclasses import dataclass

from ..params import DIRICHLET, DomainError, as_boundary, check_index, check_positive
from ..rectangles import equal_squares_eigenvalue
from .rectangle import optimize_rectangle
from .union import optimize_union

__all__ = ["ConvergenceRow", "SumProbe", "dirichlet_convergence_probe", "optimal_sum_probe", "SUM_K_CAP"]

SUM_K_CAP = 50


@dataclass(frozen=True)
class ConvergenceRow:
    alpha: float | str
    rect_value: float
    rect_aspect: float
    union_value: float
    rect_value_gap: float
    rect_aspect_gap: float
    union_value_gap: float

    def to_json(self) -> dict:
        return dict(self.__dict__)


def dirichlet_convergence_probe(k: int, area: float, alphas) -> list[ConvergenceRow]:
    """Optimal rectangle and union values along ``alphas`` and in the Dirichlet limit.

    Gaps are measured against the Dirichlet row, which is listed last.
    """
    k = check_index(k)
    area = check_positive(area, "area")
    ref_rect = optimize_rectangle(k, area, DIRICHLET)
    ref_union = optimize_union(k, area, DIRICHLET)
    rows = []
    for a in list(alphas) + [DIRICHLET]:
        bc = as_boundary(a)
        r = ref_rect if bc.is_dirichlet else optimize_rectangle(k, area, bc)
        u = ref_union if bc.is_dirichlet else optimize_union(k, area, bc)
        rows.append(
            ConvergenceRow(
                bc.to_json(),
                r.value,
                r.aspect_star,
                u.value,
                abs(r.value - ref_rect.value),
                abs(r.aspect_star - ref_rect.aspect_star),
                abs(u.value - ref_union.value),
            )
        )
    return rows


@dataclass(frozen=True)
class SumProbe:
    k: int
    area: float
    alpha: float
    sum_equal_squares: float
    sum_of_optima: float | None
    normalized: float | None

    def to_json(self) -> dict:
        return dict(self.__dict__)


def optimal_sum_probe(k: int, area: float, alpha, k_cap: int = SUM_K_CAP) -> SumProbe:
    """Sum of the first k equal-squares values against the sum of the k optima.

    ``sum_of_optima`` (and ``normalized = sum_of_optima / k^(3/2)``) are only
    computed for ``k <= k_cap`` and are ``None`` otherwise.
    """
    k = check_index(k)
    area = check_positive(area, "area")
    bc = as_boundary(alpha)
    if bc.is_dirichlet:
        raise DomainError("sum probe needs a finite alpha")
    eq = k * equal_squares_eigenvalue(k, area, bc)
    total = norm = None
    if k <= k_cap:
        total = math.fsum(optimize_union(j, area, bc).value for j in range(1, k + 1))
        norm = total / k**1.5
    return SumProbe(k, area, bc.value, eq, total, norm)
