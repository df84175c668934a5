"""Minimisation of the k-th eigenvalue over finite disjoint unions of rectangles.

The optimal union splits recursively into pieces whose relevant eigenvalues
all coincide.  Rather than bisecting on area fractions for every split, we
work on level sets: for a level ``lam`` let ``G(k, lam)`` be the least total
area of a union whose k-th eigenvalue is at most ``lam``.  Then::

    G(k, lam) = min( R(k, lam), min_{1 <= i <= k/2} G(i, lam) + G(k - i, lam) )

where ``R(k, lam)`` is the least area of a single rectangle with
``lambda_k <= lam``.  The optimal value at area ``A`` is the level ``lam``
with ``G(k, lam) = A``.  Pieces realising the minimum automatically share the
common eigenvalue ``lam``, which is exactly the equalised split.

``R(j, lam)`` is computed from mode thresholds.  For a fixed aspect ``a`` the
``(p, m)`` mode of ``R_a`` reaches ``lam`` at the unique area where its two
interval components are ``lam cos^2(theta)`` and ``lam sin^2(theta)``.  The
side lengths follow from inverting the interval phase equation, the angle
from matching the aspect, and ``R(j, lam)`` is the j-th smallest threshold
minimised over ``a``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

import numpy as np
from scipy.optimize import brentq

from ..bounds import thresholds
from ..interval import interval_eigenvalue
from ..params import AlphaLike, BoundaryParam, DomainError, as_boundary, check_index, check_positive
from ..rectangles import RectSpec, UnionSpec, _mode_pairs, equal_squares_eigenvalue, union_eigenvalue
from .rectangle import aspect_search_limit

__all__ = [
    "Leaf",
    "Node",
    "SplitTree",
    "UnionOptResult",
    "EqualSquaresCheck",
    "optimize_union",
    "equal_squares_optimality_check",
    "level_set_areas",
    "rect_min_areas",
    "inverse_length",
]

PI = math.pi


@dataclass(frozen=True)
class Leaf:
    rect: RectSpec
    count: int

    @property
    def k(self) -> int:
        return self.count

    @property
    def area(self) -> float:
        return self.rect.area

    def leaves(self) -> list["Leaf"]:
        return [self]

    def to_json(self) -> dict:
        return {"type": "leaf", "count": self.count, "area": self.rect.area, "aspect": self.rect.aspect}


@dataclass(frozen=True)
class Node:
    left: "SplitTree"
    right: "SplitTree"
    area_fraction: float

    @property
    def k(self) -> int:
        return self.left.k + self.right.k

    @property
    def area(self) -> float:
        return self.left.area + self.right.area

    def leaves(self) -> list[Leaf]:
        return self.left.leaves() + self.right.leaves()

    def to_json(self) -> dict:
        return {
            "type": "node",
            "area_fraction": self.area_fraction,
            "left": self.left.to_json(),
            "right": self.right.to_json(),
        }


SplitTree = Union[Leaf, Node]


def tree_from_json(obj: dict) -> SplitTree:
    if obj.get("type") == "leaf":
        return Leaf(RectSpec(obj["area"], obj["aspect"]), int(obj["count"]))
    return Node(tree_from_json(obj["left"]), tree_from_json(obj["right"]), float(obj["area_fraction"]))


@dataclass(frozen=True)
class UnionOptResult:
    k: int
    area: float
    alpha: BoundaryParam
    value: float
    tree: SplitTree
    flattened: UnionSpec

    @property
    def leaf_counts(self) -> list[int]:
        return [leaf.count for leaf in self.tree.leaves()]

    def is_equal_squares(self, rtol: float = 1e-6) -> bool:
        leaves = self.tree.leaves()
        return len(leaves) == self.k and all(
            leaf.count == 1 and abs(leaf.rect.aspect - 1.0) <= rtol and abs(leaf.area * self.k / self.area - 1.0) <= rtol
            for leaf in leaves
        )

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "A": self.area,
            "alpha": self.alpha.to_json(),
            "value": self.value,
            "tree": self.tree.to_json(),
            "flattened": self.flattened.to_json(),
        }


# -- mode thresholds --------------------------------------------------------


def inverse_length(x, alpha, p):
    """Interval length whose p-th eigenvalue is ``x^2``: ``(2 arctan(alpha/x) + (p-1) pi) / x``."""
    return (2.0 * np.arctan2(alpha, x) + (np.asarray(p) - 1.0) * PI) / x


def _log_ell(x, alpha, p):
    """``log l_p(x)`` and its x-derivative."""
    n = 2.0 * np.arctan2(alpha, x) + (p - 1.0) * PI
    if math.isinf(alpha):
        dn = 0.0
    else:
        dn = -2.0 * alpha / (x * x + alpha * alpha)
    return np.log(n) - np.log(x), dn / n - 1.0 / x


def mode_threshold_areas(lam: float, alpha: float, log_a, p, m, t0=None, max_iter: int = 100, return_t: bool = False):
    """Area at which mode ``(p, m)`` of ``R_a`` has eigenvalue ``lam``.

    Arrays ``log_a``, ``p`` and ``m`` broadcast.  The unknown is
    ``t = log tan(theta)``; the matching function is strictly increasing and
    close to linear in ``t``.  Newton starts from ``t0`` (default: the
    Dirichlet solution ``tan(theta) = a^2 m / p``) and falls back to bisection
    once a bracket is known.
    """
    log_a, p, m = np.broadcast_arrays(np.asarray(log_a, float), np.asarray(p, float), np.asarray(m, float))
    shape = log_a.shape
    log_a, p, m = log_a.ravel(), p.ravel(), m.ravel()
    s = math.sqrt(lam)
    target = 2.0 * log_a
    if t0 is None:
        t = target + np.log(m / p)
    else:
        t = np.array(np.broadcast_to(t0, shape), dtype=float).ravel()
    lo = np.full(t.shape, -np.inf)
    hi = np.full(t.shape, np.inf)
    active = np.arange(t.size)
    for _ in range(max_iter):
        ta = t[active]
        c = 1.0 / np.sqrt(1.0 + np.exp(2.0 * ta))
        sn = c * np.exp(ta)
        pa, ma = p[active], m[active]
        l1, d1 = _log_ell(s * c, alpha, pa)
        l2, d2 = _log_ell(s * sn, alpha, ma)
        g = l1 - l2 - target[active]
        gp = -(s * sn * d1 + s * c * d2) * sn * c
        la = np.where(g < 0, ta, lo[active])
        ha = np.where(g > 0, ta, hi[active])
        lo[active], hi[active] = la, ha
        step = np.clip(g / gp, -4.0, 4.0)
        new = ta - step
        bad = ~((new >= la) & (new <= ha)) & np.isfinite(la) & np.isfinite(ha)
        with np.errstate(invalid="ignore"):
            new = np.where(bad, 0.5 * (la + ha), new)
        t[active] = new
        scale = 1.0 + np.abs(ta)
        done = (
            (np.abs(new - ta) <= 1e-15 * scale)
            | (ha - la <= 1e-15 * scale)
            | (np.abs(g) <= 4e-16 * (np.abs(l1) + np.abs(l2) + np.abs(target[active])))
        )
        active = active[~done]
        if active.size == 0:
            break
    c = 1.0 / np.sqrt(1.0 + np.exp(2.0 * t))
    sn = c * np.exp(t)
    areas = (inverse_length(s * c, alpha, p) * inverse_length(s * sn, alpha, m)).reshape(shape)
    return (areas, t.reshape(shape)) if return_t else areas


def _square_side(lam: float, alpha: float) -> float:
    """Side of the square whose first eigenvalue is ``lam``."""
    return float(inverse_length(math.sqrt(lam / 2.0), alpha, 1))


@lru_cache(maxsize=64)
def _sorted_pairs(kmax: int):
    """Mode pairs with ``p m <= kmax`` sorted by ``p m``; prefix lengths per j."""
    ii, jj = _mode_pairs(kmax)
    order = np.argsort(ii * jj, kind="stable")
    ii, jj = ii[order], jj[order]
    prefix = np.searchsorted(ii * jj, np.arange(1, kmax + 1), side="right")
    return ii, jj, prefix


def rect_min_areas(
    lam: float,
    alpha: float,
    kmax: int,
    grid_points: int = 192,
    rounds: int = 9,
    zoom: int = 17,
    starts: int = 3,
) -> tuple[np.ndarray, np.ndarray]:
    """``R(j, lam)`` and its minimising aspect for ``j = 1..kmax``.

    The aspect is searched on a uniform grid in ``log a`` over the search
    range of the rectangle optimiser; the best ``starts`` local grid minima
    of each j are then zoomed in.  The j-th threshold only involves modes
    with ``p m <= j``.
    """
    ii, jj, prefix = _sorted_pairs(kmax)
    b_low = _square_side(lam, alpha) ** 2
    bc = BoundaryParam(None) if math.isinf(alpha) else BoundaryParam(alpha)
    cap = math.log(aspect_search_limit(kmax, b_low, bc))
    grid = np.linspace(0.0, cap, grid_points)
    full, t_full = mode_threshold_areas(lam, alpha, grid[:, None], ii[None, :], jj[None, :], return_t=True)
    h0 = grid[1] - grid[0]
    offsets = np.linspace(-1.0, 1.0, zoom)

    out_area = np.full(kmax, np.inf)
    out_aspect = np.ones(kmax)
    for j in range(1, kmax + 1):
        n = prefix[j - 1]
        col = np.partition(full[:, :n], j - 1, axis=1)[:, j - 1] if n > j else np.sort(full[:, :n], axis=1)[:, j - 1]
        left = np.r_[np.inf, col[:-1]]
        right = np.r_[col[1:], np.inf]
        idx = np.flatnonzero((col <= left) & (col <= right))
        idx = idx[np.argsort(col[idx], kind="stable")][:starts]
        centers = grid[idx]
        t_prev = t_full[idx, :n]
        vals = col[idx]
        p, m = ii[None, None, :n], jj[None, None, :n]
        h = h0
        for _ in range(rounds):
            pts = np.clip(centers[:, None] + h * offsets[None, :], 0.0, cap)
            areas, t = mode_threshold_areas(
                lam, alpha, pts[:, :, None], p, m, t0=t_prev[:, None, :], return_t=True
            )
            sel = np.partition(areas, j - 1, axis=2)[:, :, j - 1] if n > j else np.sort(areas, axis=2)[:, :, j - 1]
            pick = np.argmin(sel, axis=1)
            rows = np.arange(pts.shape[0])
            centers = pts[rows, pick]
            vals = sel[rows, pick]
            t_prev = t[rows, pick, :]
            h = 2.0 * h / (zoom - 1)
        for c, v in sorted(zip(centers, vals)):
            if v < out_area[j - 1] * (1.0 - 1e-13):
                out_area[j - 1] = v
                out_aspect[j - 1] = math.exp(c)
        # the square sits on the search boundary; snap to it when flat to rounding
        if col[0] <= out_area[j - 1] * (1.0 + 1e-12):
            out_area[j - 1] = col[0]
            out_aspect[j - 1] = 1.0
    return out_area, out_aspect


def level_set_areas(lam: float, alpha: float, kmax: int):
    """Dynamic programme for ``G(k, lam)``, ``k = 1..kmax``.

    Returns ``(G, choice, rect_area, rect_aspect)`` where ``choice[k]`` is 0
    for a single rectangle or the size ``i <= k/2`` of the smaller part.
    """
    rect_area, rect_aspect = rect_min_areas(lam, alpha, kmax)
    g = np.empty(kmax + 1)
    choice = np.zeros(kmax + 1, dtype=int)
    g[0] = 0.0
    for n in range(1, kmax + 1):
        best, arg = math.inf, 0
        for i in range(n // 2, 0, -1):
            v = g[i] + g[n - i]
            if v < best * (1.0 - 1e-12):
                best, arg = v, i
        if rect_area[n - 1] < best * (1.0 - 1e-12) or arg == 0:
            best, arg = rect_area[n - 1], 0
        g[n] = best
        choice[n] = arg
    return g, choice, rect_area, rect_aspect


def _build_tree(n: int, choice, rect_area, rect_aspect, scale: float) -> SplitTree:
    i = int(choice[n])
    if i == 0:
        return Leaf(RectSpec(rect_area[n - 1] * scale, max(1.0, rect_aspect[n - 1])), n)
    left = _build_tree(i, choice, rect_area, rect_aspect, scale)
    right = _build_tree(n - i, choice, rect_area, rect_aspect, scale)
    return Node(left, right, left.area / (left.area + right.area))


def _balanced_squares(lo: int, hi: int, area: float) -> SplitTree:
    n = hi - lo
    if n == 1:
        return Leaf(RectSpec(area, 1.0), 1)
    half = n // 2
    return Node(_balanced_squares(lo, lo + half, area), _balanced_squares(lo + half, hi, area), half / n)


def optimize_union(k: int, area: float, alpha: AlphaLike, xtol: float = 1e-13) -> UnionOptResult:
    """Least k-th eigenvalue over disjoint unions of rectangles of total area ``area``.

    Ties between splits are resolved towards the most balanced split.
    """
    k = check_index(k)
    area = check_positive(area, "area")
    bc = as_boundary(alpha)
    if bc.is_neumann:
        tree = _balanced_squares(0, k, area / k)
        return UnionOptResult(k, area, bc, 0.0, tree, UnionSpec(tuple(l.rect for l in tree.leaves())))
    a = bc.alpha
    lam_lo = 2.0 * interval_eigenvalue(math.sqrt(area), bc, 1) * (1.0 - 1e-9)
    lam_hi = equal_squares_eigenvalue(k, area, bc) * (1.0 + 1e-9)
    log_area = math.log(area)

    def h(log_lam: float) -> float:
        g = level_set_areas(math.exp(log_lam), a, k)[0]
        return math.log(g[k]) - log_area

    lo, hi = math.log(lam_lo), math.log(lam_hi)
    if k == 1 or h(hi) >= 0.0:
        log_lam = hi if k > 1 else math.log(2.0 * interval_eigenvalue(math.sqrt(area), bc, 1))
    else:
        log_lam = brentq(h, lo, hi, xtol=xtol, rtol=4 * np.finfo(float).eps)
    lam = math.exp(log_lam)
    g, choice, rect_area, rect_aspect = level_set_areas(lam, a, k)
    tree = _build_tree(k, choice, rect_area, rect_aspect, area / g[k])
    flattened = UnionSpec(tuple(leaf.rect for leaf in tree.leaves()))
    return UnionOptResult(k, area, bc, lam, tree, flattened)


@dataclass(frozen=True)
class EqualSquaresCheck:
    k: int
    area: float
    alpha: float
    alpha_sufficient: float
    sufficient_condition_met: bool
    dp_value: float
    equal_squares_value: float
    dp_agrees: bool

    def to_json(self) -> dict:
        return dict(self.__dict__)


def equal_squares_optimality_check(k: int, area: float, alpha: AlphaLike, rtol: float = 1e-6) -> EqualSquaresCheck:
    """Compare the optimal union with k equal squares and the sufficient threshold."""
    k = check_index(k)
    area = check_positive(area, "area")
    bc = as_boundary(alpha)
    if bc.is_dirichlet:
        raise DomainError("the equal-squares threshold needs a finite alpha")
    res = optimize_union(k, area, bc)
    eq = equal_squares_eigenvalue(k, area, bc)
    a_suff = thresholds(k, area).alpha_sufficient
    agrees = abs(res.value - eq) <= rtol * max(abs(eq), 1e-300) if eq else res.value == 0.0
    return EqualSquaresCheck(k, area, bc.value, a_suff, bc.value <= a_suff, res.value, eq, bool(agrees))
