"""Named verification suites with machine-readable reports.

Each suite returns a :class:`SuiteReport` whose rows carry their own
tolerance semantics:

``abs``   ``|observed - expected| <= tolerance``
``rel``   ``|observed - expected| <= tolerance * |expected|``
``le``    ``observed <= expected + tolerance``
``ge``    ``observed >= expected - tolerance``
``lt``    ``observed < expected`` (``tolerance`` is a relative margin)
``gt``    ``observed > expected`` (``tolerance`` is a relative margin)
``bool``  ``observed == expected``
``info``  reported only, always passes
"""
from __future__ import annotations

import csv
import io
import json
import math
import time
from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

from . import bounds as B
from .interval import interval_eigenvalues
from .optimize import (
    dirichlet_convergence_probe,
    equal_squares_optimality_check,
    optimal_sum_probe,
    optimize_rectangle,
    optimize_union,
    solve_transition,
    three_merge_candidate,
    transition_crossing_check,
)
from .params import DIRICHLET, DomainError
from .rectangles import RectSpec, equal_squares_eigenvalue, is_k1_mode, mode_eigenvalue, rect_counting, rect_eigenvalue

__all__ = [
    "SuiteRow",
    "SuiteReport",
    "SUITES",
    "SUITE_DEFAULTS",
    "run_suite",
    "fit_eig1_cubic_coefficient",
    "fit_eig2_large_alpha_coefficient",
    "series_error_slope",
    "CSV_HEADER",
]

CSV_HEADER = ("suite", "case", "expected", "observed", "tolerance", "mode", "pass")
MODES = ("abs", "rel", "le", "ge", "lt", "gt", "bool", "info")
PI = math.pi
PI2 = PI * PI


def _passes(expected, observed, tolerance: float, mode: str) -> bool:
    if mode == "info":
        return True
    if mode == "bool":
        return bool(observed) == bool(expected)
    if observed is None or not math.isfinite(observed):
        return False
    if mode == "abs":
        return abs(observed - expected) <= tolerance
    if mode == "rel":
        return abs(observed - expected) <= tolerance * abs(expected)
    if mode == "le":
        return observed <= expected + tolerance
    if mode == "ge":
        return observed >= expected - tolerance
    if mode == "lt":
        return observed < expected * (1.0 - math.copysign(tolerance, expected))
    if mode == "gt":
        return observed > expected * (1.0 + math.copysign(tolerance, expected))
    raise ValueError(f"unknown row mode {mode!r}")


@dataclass(frozen=True)
class SuiteRow:
    case: str
    expected: Any
    observed: Any
    tolerance: float
    mode: str
    passed: bool = field(init=False)

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown row mode {self.mode!r}")
        exp = bool(self.expected) if self.mode == "bool" else _num(self.expected)
        obs = bool(self.observed) if self.mode == "bool" else _num(self.observed)
        object.__setattr__(self, "expected", exp)
        object.__setattr__(self, "observed", obs)
        object.__setattr__(self, "passed", _passes(exp, obs, float(self.tolerance), self.mode))

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "expected": self.expected,
            "observed": self.observed,
            "tolerance": self.tolerance,
            "mode": self.mode,
            "pass": self.passed,
        }


def _num(x):
    return None if x is None else float(x)


def _fmt(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if x is None:
        return ""
    return repr(float(x))


@dataclass
class SuiteReport:
    suite: str
    seed: int
    config: dict
    rows: list[SuiteRow]
    wall_time: float = 0.0

    @property
    def n_pass(self) -> int:
        return sum(r.passed for r in self.rows)

    @property
    def n_fail(self) -> int:
        return len(self.rows) - self.n_pass

    @property
    def ok(self) -> bool:
        return self.n_fail == 0

    def failures(self) -> list[SuiteRow]:
        return [r for r in self.rows if not r.passed]

    def to_json(self, include_timing: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "seed": self.seed,
            "generator": "numpy.random.PCG64",
            "config": self.config,
            "summary": {"rows": len(self.rows), "pass": self.n_pass, "fail": self.n_fail},
            "rows": [r.to_json() for r in self.rows],
        }
        if include_timing:
            out["wall_time"] = self.wall_time
        return out

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for r in self.rows:
            w.writerow([self.suite, r.case, _fmt(r.expected), _fmt(r.observed), _fmt(r.tolerance), r.mode, _fmt(r.passed)])
        return buf.getvalue()


class _Rows(list):
    def add(self, case: str, expected, observed, tolerance: float, mode: str) -> None:
        self.append(SuiteRow(case, expected, observed, tolerance, mode))


# -- helpers shared with the tests -----------------------------------------


def series_error_slope(series: Callable[[float], float], exact: np.ndarray, xs: np.ndarray) -> float:
    """Least-squares slope of ``log|series - exact|`` against ``log x``."""
    err = np.abs(np.array([series(float(x)) for x in xs]) - exact)
    return float(np.polyfit(np.log(xs), np.log(err), 1)[0])


def fit_eig1_cubic_coefficient(alpha: float = 5.0, a_values=None) -> dict:
    """Numerically fitted coefficient ``c`` of ``c alpha^5 a^3`` in the small-a series.

    ``(lambda_1 - four terms) / (alpha^5 a^3)`` is fitted as a polynomial
    in ``a`` and the intercept is reported next to the implemented value.
    """
    a = np.geomspace(2e-3, 4e-2, 12) if a_values is None else np.asarray(a_values, float)
    exact = interval_eigenvalues(a, alpha, 1)
    four = np.array([B.eig1_series_small_a(float(x), alpha, 4).value for x in a])
    ratio = (exact - four) / (alpha**5 * a**3)
    coef = np.polyfit(a, ratio, 2)
    return {"fitted": float(coef[-1]), "implemented": 2.0 / 1475.0, "candidate": 2.0 / 14175.0}


def fit_eig2_large_alpha_coefficient(a: float = 1.0, alphas=None) -> dict:
    """Fitted coefficient of ``pi^2 / (alpha^3 a^5)`` in the large-alpha series of lambda_2."""
    al = np.geomspace(200.0, 2000.0, 10) if alphas is None else np.asarray(alphas, float)
    exact = interval_eigenvalues(a, al, 2)
    three = np.array([B.eig2_series_large_alpha(a, float(x), 3).value for x in al])
    ratio = (exact - three) * al**3 * a**5 / PI2
    coef = np.polyfit(1.0 / al, ratio, 2)
    return {"fitted": float(coef[-1]), "implemented": -128.0, "candidate": 64.0 * (PI2 - 6.0) / 3.0}


# -- suites ----------------------------------------------------------------


def _appendix_bounds(cfg: dict, rng: np.random.Generator) -> list[SuiteRow]:
    rows = _Rows()
    n = cfg["samples"]
    lo, hi = cfg["range"]
    a = np.exp(rng.uniform(math.log(lo), math.log(hi), n))
    al = np.exp(rng.uniform(math.log(lo), math.log(hi), n))
    ks = rng.integers(1, cfg["k_max"] + 1, n)
    areas = np.exp(rng.uniform(math.log(lo), math.log(hi), n))
    l1 = interval_eigenvalues(a, al, 1)
    l2 = interval_eigenvalues(a, al, 2)
    sq = 2.0 * interval_eigenvalues(np.sqrt(areas / ks), al, 1)
    tol = cfg["tolerance"]
    for i in range(n):
        ai, bi = float(a[i]), float(al[i])
        slack = []
        for bound, value in (
            (B.eig1_bounds(ai, bi), l1[i]),
            (B.eig2_bounds(ai, bi), l2[i]),
            (B.union_squares_bounds(int(ks[i]), float(areas[i]), bi), sq[i]),
        ):
            slack.append((value - bound.lower) / bound.upper)
            slack.append((bound.upper - value) / bound.upper)
        slack.append((B.eig1_upper_simple(ai, bi) - l1[i]) / l1[i])
        slack.append((l2[i] - l1[i]) * ai * ai / PI2 - 1.0)
        rows.add(f"sandwich/{i:06d}/a={ai!r}/alpha={bi!r}/k={int(ks[i])}/A={float(areas[i])!r}", 0.0, min(slack), tol, "ge")

    for a_seam in (0.1, 1.0, 10.0):
        f, s = B.eig2_upper_branches(a_seam, PI2 / (2 * a_seam))
        rows.add(f"eig2-seam/a={a_seam!r}", f, s, 1e-10, "rel")
    x = np.linspace(1e-6, PI / 2 - 1e-6, 2001)
    worst = min(min(math.tan(v) - B.tan_envelope(v).lower, B.tan_envelope(v).upper - math.tan(v)) for v in x)
    rows.add("tan-envelope/min-slack", 0.0, worst, 0.0, "ge")

    alpha_s = cfg["small_a_alpha"]
    a_grid = np.geomspace(1e-3, 1e-1, 12)
    al_grid = np.geomspace(100.0, 2000.0, 12)
    e1 = interval_eigenvalues(a_grid, alpha_s, 1)
    e2 = interval_eigenvalues(a_grid, alpha_s, 2)
    f1 = interval_eigenvalues(1.0, al_grid, 1)
    f2 = interval_eigenvalues(1.0, al_grid, 2)
    rows.add(
        "series/eig1-small-a/order=4/slope",
        2.5,
        series_error_slope(lambda v: B.eig1_series_small_a(v, alpha_s, 4).value, e1, a_grid),
        0.0,
        "ge",
    )
    rows.add(
        "series/eig2-small-a/order=4/slope",
        1.5,
        series_error_slope(lambda v: B.eig2_series_small_a(v, alpha_s, 4).value, e2, a_grid),
        0.0,
        "ge",
    )
    rows.add(
        "series/eig1-large-alpha/order=4/slope",
        -3.5,
        series_error_slope(lambda v: B.eig1_series_large_alpha(1.0, v, 4).value, f1, al_grid),
        0.0,
        "le",
    )
    rows.add(
        "series/eig2-large-alpha/order=3/slope",
        -2.5,
        series_error_slope(lambda v: B.eig2_series_large_alpha(1.0, v, 3).value, f2, al_grid),
        0.0,
        "le",
    )
    rows.add(
        "series/eig2-large-alpha/order=5/slope",
        -4.5,
        series_error_slope(lambda v: B.eig2_series_large_alpha(1.0, v, 5).value, f2, al_grid),
        0.0,
        "info",
    )
    fit = fit_eig1_cubic_coefficient()
    rows.add("series/eig1-small-a/a3-coefficient", fit["implemented"], fit["fitted"], 0.0, "info")
    fit2 = fit_eig2_large_alpha_coefficient()
    rows.add("series/eig2-large-alpha/alpha-3-coefficient", fit2["implemented"], fit2["fitted"], 0.0, "info")

    k_vals = np.array([1e2, 1e3, 1e4, 1e5, 1e6])
    exact = np.array([equal_squares_eigenvalue(int(k), 1.0, 1.0) for k in k_vals])
    rows.add(
        "series/optimal-union/order=2/slope-in-k",
        -0.5,
        series_error_slope(lambda k: B.optimal_union_series(int(k), 1.0, 1.0, 2).value, exact, k_vals),
        0.2,
        "abs",
    )
    return rows


def _isoperimetric(cfg: dict, rng) -> list[SuiteRow]:
    rows = _Rows()
    grid = np.geomspace(1.0, cfg["a_max"], cfg["grid_points"])
    for alpha in cfg["alphas"]:
        vals = np.array([rect_eigenvalue(RectSpec(1.0, float(x)), alpha, 1).value for x in grid])
        rows.add(f"lambda1/alpha={alpha!r}/argmin-aspect", 1.0, float(grid[int(np.argmin(vals))]), 0.0, "abs")
        rows.add(f"lambda1/alpha={alpha!r}/min-excess-off-square", 0.0, float(np.min(vals[1:] - vals[0])), 0.0, "gt")
        two_sq = equal_squares_eigenvalue(2, 1.0, alpha)
        res = optimize_union(2, 1.0, alpha)
        rows.add(f"lambda2/alpha={alpha!r}/union-value", two_sq, res.value, 1e-6, "rel")
        rows.add(f"lambda2/alpha={alpha!r}/two-equal-squares", True, res.is_equal_squares(), 0.0, "bool")
        rect2 = np.array([rect_eigenvalue(RectSpec(1.0, float(x)), alpha, 2).value for x in grid])
        rows.add(f"lambda2/alpha={alpha!r}/rectangles-above-two-squares", two_sq, float(rect2.min()), 0.0, "gt")
    return rows


def _k1_mode(cfg: dict, rng) -> list[SuiteRow]:
    rows = _Rows()
    for alpha in cfg["alphas"]:
        for k in range(1, cfg["k_max"] + 1):
            for factor in (1.0, 1.5):
                rect = RectSpec(1.0, factor * math.sqrt(k))
                rows.add(f"alpha={alpha!r}/k={k:03d}/aspect={factor}sqrt(k)", True, is_k1_mode(rect, alpha, k), 0.0, "bool")
        for k in range(1, cfg["k_vs_squares_max"] + 1):
            a = float(np.exp(rng.uniform(0.0, math.log(4.0 * math.sqrt(k)))))
            mode = mode_eigenvalue(RectSpec(1.0, a), alpha, (k, 1)).value
            rows.add(
                f"alpha={alpha!r}/k={k:03d}/k1-mode-vs-equal-squares/aspect={a!r}",
                equal_squares_eigenvalue(k, 1.0, alpha),
                mode,
                1e-12,
                "ge",
            )
    return rows


def _counting(cfg: dict, rng) -> list[SuiteRow]:
    rows = _Rows()
    for i in range(cfg["samples"]):
        a = float(rng.uniform(1.0, 10.0))
        area = float(np.exp(rng.uniform(math.log(0.1), math.log(10.0))))
        lam = float(rng.uniform(0.0, cfg["lambda_max"]))
        alpha = float(np.exp(rng.uniform(math.log(1e-2), math.log(1e2)))) if i % 4 else 0.0
        n = rect_counting(RectSpec(area, a), alpha, lam)
        rows.add(f"{i:05d}/a={a!r}/A={area!r}/alpha={alpha!r}/lambda={lam!r}", B.counting_upper_bound(a, area, lam), n, 0.0, "le")
        if alpha == 0.0:
            l1, l2 = math.sqrt(area) * a, math.sqrt(area) / a
            lattice = sum(
                int(math.floor(l2 * math.sqrt(lam - (PI * p / l1) ** 2) / PI)) + 1
                for p in range(int(l1 * math.sqrt(lam) / PI) + 1)
            )
            rows.add(f"{i:05d}/neumann-lattice", lattice, n, 0.0, "abs")
    return rows


def _k_squares(cfg: dict, rng) -> list[SuiteRow]:
    rows = _Rows()
    area = cfg["area"]
    for k in range(cfg["k_min"], cfg["k_max"] + 1):
        alpha = cfg["alpha_factor"] * B.thresholds(k, area).alpha_sufficient
        chk = equal_squares_optimality_check(k, area, alpha)
        lower = 4 * PI2 * k * alpha / (math.sqrt(area) * PI2 * math.sqrt(k) + 2 * area * alpha)
        upper = 4 * math.sqrt(k) * alpha / math.sqrt(area)
        rows.add(f"k={k:03d}/lower", lower, chk.dp_value, 0.0, "gt")
        rows.add(f"k={k:03d}/upper", upper, chk.dp_value, 0.0, "le")
        rows.add(f"k={k:03d}/sufficient-condition", True, chk.sufficient_condition_met, 0.0, "bool")
        rows.add(f"k={k:03d}/dp-agrees", True, chk.dp_agrees, 0.0, "bool")
    return rows


def _transition(cfg: dict, rng) -> list[SuiteRow]:
    rows = _Rows()
    sol = solve_transition()
    tol = cfg["tolerance"]
    rows.add("C", 7.58442, sol.C, tol, "abs")
    for name, ref in zip(("c1", "c2", "c3"), (1.25193, 0.788535, 1.58520)):
        rows.add(name, ref, getattr(sol, name), tol, "abs")
    rows.add("C>4/5", 0.8, sol.C, 0.0, "gt")
    rows.add("C<5pi^2/2", 5 * PI2 / 2, sol.C, 0.0, "lt")
    for i, r in enumerate(sol.residuals):
        rows.add(f"residual-{i + 1}", 0.0, r, 1e-12, "abs")
    for k in cfg["crossing_k"]:
        chk = transition_crossing_check(k, 1.0, sol)
        rows.add(f"k={k:03d}/crossing-residual", 0.0, chk.crossing_residual, 1e-6, "le")
        rows.add(f"k={k:03d}/degeneracy-residual", 0.0, chk.degeneracy_residual, 1e-12, "le")
    for k in cfg["merge_k"]:
        for factor in (cfg["above"], cfg["below"]):
            alpha = factor * sol.alpha(k, 1.0)
            cand = three_merge_candidate(k, 1.0, alpha).value
            eq = equal_squares_eigenvalue(k, 1.0, alpha)
            mode = "lt" if factor > 1 else "gt"
            rows.add(f"k={k:03d}/factor={factor!r}/three-merge-vs-squares", eq, cand, cfg["comparison_rtol"], mode)
    return rows


def _rectangles_23(cfg: dict, rng) -> list[SuiteRow]:
    rows = _Rows()
    alpha, area = cfg["alpha"], cfg["area"]
    limit = 3.0 * (PI * alpha / area) ** (2.0 / 3.0)
    ks, aspects = [], []
    for k in cfg["k_values"]:
        res = optimize_rectangle(k, area, alpha)
        ks.append(k)
        aspects.append(res.aspect_star)
        rows.add(f"k={k:07d}/value/k^(2/3)", limit, res.value / k ** (2.0 / 3.0), cfg["limit_rtol"], "rel")
    slope = float(np.polyfit(np.log(ks), np.log(aspects), 1)[0])
    lo, hi = cfg["aspect_exponent_window"]
    rows.add("aspect-exponent/lower", lo, slope, 0.0, "ge")
    rows.add("aspect-exponent/upper", hi, slope, 0.0, "le")
    c3 = B.thresholds(1, area).rect_C3
    for k in cfg["bound_k_values"]:
        if alpha > c3 * math.sqrt(k):
            continue
        res = optimize_rectangle(k, area, alpha)
        bnd = B.rectangle_value_bounds(k, area, alpha)
        rows.add(f"k={k:07d}/two-sided/lower", bnd.lower, res.value, 0.0, "ge")
        rows.add(f"k={k:07d}/two-sided/upper", bnd.upper, res.value, 0.0, "le")
    return rows


def _union_12(cfg: dict, rng) -> list[SuiteRow]:
    rows = _Rows()
    k = cfg["ratio_k"]
    rows.add(f"k={k}/equal-squares/sqrt(k)", 4.0, equal_squares_eigenvalue(k, 1.0, 1.0) / math.sqrt(k), cfg["ratio_rtol"], "rel")
    k = cfg["series_k"]
    rows.add(
        f"k={k}/series-order-5",
        equal_squares_eigenvalue(k, 1.0, 1.0),
        B.optimal_union_series(k, 1.0, 1.0, 5).value,
        cfg["series_atol"],
        "abs",
    )
    for k in range(1, cfg["dp_k_max"] + 1):
        res = optimize_union(k, 1.0, cfg["alpha"])
        eq = equal_squares_eigenvalue(k, 1.0, cfg["alpha"])
        rows.add(f"k={k:03d}/optimum<=equal-squares", eq, res.value, 1e-9 * eq, "le")
        rows.add(f"k={k:03d}/optimum<=4sqrt(k)alpha", 4 * math.sqrt(k) * cfg["alpha"], res.value, 0.0, "le")
        rect = optimize_rectangle(k, 1.0, cfg["alpha"]).value
        rows.add(f"k={k:03d}/optimum<=best-rectangle", rect, res.value, 1e-9 * rect, "le")
    return rows


def _dirichlet_limit(cfg: dict, rng) -> list[SuiteRow]:
    rows = _Rows()
    table = dirichlet_convergence_probe(cfg["k"], cfg["area"], cfg["alphas"])
    ref = table[-1]
    for prev, row in zip(table[:-2], table[1:-1]):
        rows.add(f"alpha={row.alpha!r}/rect-gap-decreasing", prev.rect_value_gap, row.rect_value_gap, 0.0, "lt")
        rows.add(f"alpha={row.alpha!r}/union-gap-decreasing", prev.union_value_gap, row.union_value_gap, 0.0, "lt")
    for row in table[:-1]:
        rows.add(f"alpha={row.alpha!r}/rect-below-dirichlet", ref.rect_value, row.rect_value, 0.0, "le")
        rows.add(f"alpha={row.alpha!r}/union-below-dirichlet", ref.union_value, row.union_value, 0.0, "le")
    sq = optimize_rectangle(1, cfg["area"], DIRICHLET)
    rows.add("k=1/dirichlet-square-value", 2 * PI2 / cfg["area"], sq.value, 1e-10, "rel")
    rows.add("k=1/dirichlet-square-aspect", 1.0, sq.aspect_star, 0.0, "abs")
    return rows


def _sums(cfg: dict, rng) -> list[SuiteRow]:
    rows = _Rows()
    k = cfg["k"]
    probe = optimal_sum_probe(k, cfg["area"], cfg["alpha"], k_cap=cfg["k_cap"])
    lo, hi = cfg["normalized_window"]
    scale = cfg["alpha"] / math.sqrt(cfg["area"])
    rows.add(f"k={k}/normalized/lower", lo * scale, probe.normalized, 0.0, "ge")
    rows.add(f"k={k}/normalized/upper", hi * scale, probe.normalized, 0.0, "le")
    rows.add(f"k={k}/optima<=equal-squares", probe.sum_equal_squares, probe.sum_of_optima, 0.0, "le")
    for kk in sorted(set(cfg["equal_squares_k"]) | {k}):
        p = optimal_sum_probe(kk, cfg["area"], cfg["alpha"], k_cap=0)
        rows.add(f"k={kk}/equal-squares<=4k^(3/2)", 4 * kk**1.5 * scale, p.sum_equal_squares, 0.0, "le")
    return rows


SUITE_DEFAULTS: dict[str, dict] = {
    "appendix-bounds": {"samples": 10_000, "range": [0.01, 100.0], "k_max": 100, "tolerance": 1e-10, "small_a_alpha": 5.0},
    "isoperimetric": {"alphas": [0.1, 1.0, 10.0], "a_max": 10.0, "grid_points": 200},
    "k1-mode": {"alphas": [0.1, 1.0, 10.0], "k_max": 50, "k_vs_squares_max": 30},
    "counting": {"samples": 2000, "lambda_max": 2000.0},
    "k-squares": {"k_min": 3, "k_max": 20, "area": 1.0, "alpha_factor": 0.9},
    "transition": {
        "tolerance": 1e-4,
        "crossing_k": [12],
        "merge_k": [6, 12],
        "above": 1.05,
        "below": 0.95,
        "comparison_rtol": 1e-8,
    },
    "rectangles-23": {
        "alpha": 1.0,
        "area": 1.0,
        "k_values": [100, 1000, 10_000, 100_000],
        "limit_rtol": 0.05,
        "aspect_exponent_window": [0.63, 0.70],
        "bound_k_values": [60, 80, 100, 150, 200],
    },
    "union-12": {
        "ratio_k": 10_000,
        "ratio_rtol": 0.01,
        "series_k": 1_000_000,
        "series_atol": 1e-6,
        "dp_k_max": 12,
        "alpha": 1.0,
    },
    "dirichlet-limit": {"k": 3, "area": 1.0, "alphas": [1.0, 10.0, 100.0, 1000.0, 10000.0]},
    "sums": {
        "k": 30,
        "k_cap": 50,
        "area": 1.0,
        "alpha": 1.0,
        "normalized_window": [2.0, 4.0],
        "equal_squares_k": [30, 100],
    },
}

SUITES: dict[str, Callable[[dict, np.random.Generator], list[SuiteRow]]] = {
    "appendix-bounds": _appendix_bounds,
    "isoperimetric": _isoperimetric,
    "k1-mode": _k1_mode,
    "counting": _counting,
    "k-squares": _k_squares,
    "transition": _transition,
    "rectangles-23": _rectangles_23,
    "union-12": _union_12,
    "dirichlet-limit": _dirichlet_limit,
    "sums": _sums,
}


def run_suite(name: str, config: dict | None = None, seed: int = 0) -> SuiteReport:
    """Run one suite; ``config`` overrides entries of ``SUITE_DEFAULTS[name]``."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    cfg = dict(SUITE_DEFAULTS[name])
    for key, value in (config or {}).items():
        if key not in cfg:
            raise DomainError(f"unknown option {key!r} for suite {name!r}")
        cfg[key] = value
    rng = np.random.default_rng(seed)
    start = time.perf_counter()
    rows = sorted(SUITES[name](cfg, rng), key=lambda r: r.case)
    return SuiteReport(name, seed, json.loads(json.dumps(cfg)), rows, time.perf_counter() - start)
