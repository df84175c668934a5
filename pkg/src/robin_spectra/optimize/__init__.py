"""Shape optimisation over rectangles and unions of rectangles."""
from .probes import ConvergenceRow, SumProbe, dirichlet_convergence_probe, optimal_sum_probe
from .rectangle import RectOptResult, aspect_search_limit, optimize_rectangle
from .transition import (
    CrossingCheck,
    ThreeMergeCandidate,
    TransitionSolution,
    solve_transition,
    three_merge_candidate,
    transition_crossing_check,
)
from .union import (
    EqualSquaresCheck,
    Leaf,
    Node,
    SplitTree,
    UnionOptResult,
    equal_squares_optimality_check,
    optimize_union,
    tree_from_json,
)

__all__ = [
    "ConvergenceRow",
    "CrossingCheck",
    "EqualSquaresCheck",
    "Leaf",
    "Node",
    "RectOptResult",
    "SplitTree",
    "SumProbe",
    "ThreeMergeCandidate",
    "TransitionSolution",
    "UnionOptResult",
    "aspect_search_limit",
    "dirichlet_convergence_probe",
    "equal_squares_optimality_check",
    "optimal_sum_probe",
    "optimize_rectangle",
    "optimize_union",
    "solve_transition",
    "three_merge_candidate",
    "transition_crossing_check",
    "tree_from_json",
]
