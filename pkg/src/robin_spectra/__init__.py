"""Robin Laplacian eigenvalues on intervals, rectangles and unions of rectangles."""
__version__ = "0.1.0"

from .bounds import (
    SeriesEval,
    TwoSidedBound,
    counting_upper_bound,
    eig1_bounds,
    eig1_series_large_alpha,
    eig1_series_small_a,
    eig1_upper_simple,
    eig2_bounds,
    eig2_series_large_alpha,
    eig2_series_small_a,
    envelope_constants,
    gap_lower_bound,
    optimal_union_series,
    tan_envelope,
    thresholds,
    union_squares_bounds,
)
from .interval import interval_count_below, interval_eigenvalue, interval_eigenvalues
from .optimize import (
    Leaf,
    Node,
    RectOptResult,
    TransitionSolution,
    UnionOptResult,
    dirichlet_convergence_probe,
    equal_squares_optimality_check,
    optimal_sum_probe,
    optimize_rectangle,
    optimize_union,
    solve_transition,
    three_merge_candidate,
    transition_crossing_check,
)
from .params import DIRICHLET, NEUMANN, BoundaryParam, DomainError, as_boundary
from .rectangles import (
    ModeEigen,
    ModeIndex,
    RectSpec,
    UnionSpec,
    equal_squares_eigenvalue,
    is_k1_mode,
    mode_eigenvalue,
    rect_counting,
    rect_eigenvalue,
    union_eigenvalue,
)
from .verify import SuiteReport, run_suite

import types as _types

__all__ = sorted(n for n, v in globals().items() if not n.startswith("_") and not isinstance(v, _types.ModuleType))
