"""Robin eigenvalues of the one-dimensional Laplacian on an interval.

On an interval of length ``L`` the k-th eigenvalue is ``x**2`` where ``x``
solves::

    alpha = x * tan(L x / 2)        (k odd)
    alpha = -x * cot(L x / 2)       (k even)

on the branch ``x in ((k-1) pi / L, k pi / L)``.  Both equations are the
same pole-free *phase* equation::

    L x - 2 arctan(alpha / x) = (k - 1) pi

whose left-hand side is strictly increasing and concave in ``x``.  All root
finding here is done on the phase form, so no tangent pole is ever evaluated.
"""
from __future__ import annotations

import math

import numpy as np

from .params import AlphaLike, DomainError, as_boundary, check_index, check_positive

__all__ = [
    "interval_eigenvalue",
    "interval_count_below",
    "interval_eigenvalues",
    "count_below",
    "phase",
    "phase_residual",
    "tan_form_residual",
]

DEFAULT_RTOL = 1e-12


def phase(length, alpha, x):
    """``L x - 2 arctan(alpha / x)``, vectorised; ``alpha`` may be ``inf``."""
    return np.multiply(length, x) - 2.0 * np.arctan2(alpha, x)


def _phase_scalar(length: float, alpha: float, x: float) -> float:
    return length * x - 2.0 * math.atan2(alpha, x)


def interval_eigenvalue(length: float, bc: AlphaLike, k: int, rtol: float = DEFAULT_RTOL) -> float:
    """k-th Robin eigenvalue of an interval of the given length.

    Parameters
    ----------
    length : float
        Interval length ``a > 0``.
    bc : BoundaryParam, float or "dirichlet"
        Boundary coefficient.
    k : int
        1-based eigenvalue index.
    rtol : float
        Relative bisection tolerance on ``x = sqrt(lambda)``.

    Returns
    -------
    float
        The eigenvalue ``lambda_k``.  Neumann and Dirichlet return the closed
        forms ``pi^2 (k-1)^2 / a^2`` and ``pi^2 k^2 / a^2``.
    """
    length = check_positive(length, "length")
    k = check_index(k)
    bc = as_boundary(bc)
    if bc.is_dirichlet:
        return (math.pi * k / length) ** 2
    if bc.is_neumann:
        return (math.pi * (k - 1) / length) ** 2
    alpha = bc.value
    lo = (k - 1) * math.pi / length
    hi = k * math.pi / length
    target = (k - 1) * math.pi
    f_lo = _phase_scalar(length, alpha, lo) - target
    f_hi = _phase_scalar(length, alpha, hi) - target
    if not (f_lo < 0.0 < f_hi):
        raise AssertionError(
            f"bracket failure: length={length!r} alpha={alpha!r} k={k} "
            f"f({lo!r})={f_lo!r} f({hi!r})={f_hi!r}"
        )
    while hi - lo > rtol * hi:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if _phase_scalar(length, alpha, mid) - target < 0.0:
            lo = mid
        else:
            hi = mid
    x = 0.5 * (lo + hi)
    return x * x


def interval_eigenvalues(length, alpha, k, max_iter: int = 200) -> np.ndarray:
    """Vectorised eigenvalues ``lambda_k(I_L, alpha)`` by Newton on the phase.

    ``length``, ``alpha`` and ``k`` broadcast against each other.  ``alpha``
    is a plain float array where ``inf`` means Dirichlet.  Because the phase
    is increasing and concave, Newton started at the left end of the branch
    increases monotonically to the root, so no safeguard is needed.
    """
    L, a, kk = np.broadcast_arrays(
        np.asarray(length, dtype=float), np.asarray(alpha, dtype=float), np.asarray(k)
    )
    kk = kk.astype(float)
    out = np.empty(L.shape, dtype=float)
    dirichlet = np.isinf(a)
    neumann = a == 0.0
    out[dirichlet] = (np.pi * kk[dirichlet] / L[dirichlet]) ** 2
    out[neumann] = (np.pi * (kk[neumann] - 1.0) / L[neumann]) ** 2
    robin = ~(dirichlet | neumann)
    if not robin.any():
        return out
    L, a, kk = L[robin], a[robin], kk[robin]
    target = (kk - 1.0) * np.pi
    x = target / L
    with np.errstate(divide="ignore", invalid="ignore"):
        for _ in range(max_iter):
            f = L * x - 2.0 * np.arctan2(a, x) - target
            fp = L + 2.0 * a / (x * x + a * a)
            step = f / fp
            x = x - step
            if np.all(np.abs(step) <= 4e-16 * np.abs(x)):
                break
    out[robin] = x * x
    return out


def count_below(length, alpha, lam) -> np.ndarray:
    """Vectorised ``#{k : lambda_k(I_L, alpha) <= lam}`` (``alpha=inf`` allowed).

    The Dirichlet count ``floor(L sqrt(lam) / pi)`` is a lower bound on the
    Robin count and the Neumann count exceeds it by at most one; the single
    undecided eigenvalue is settled by the sign of the phase function.
    """
    L, a, lam = np.broadcast_arrays(
        np.asarray(length, dtype=float), np.asarray(alpha, dtype=float), np.asarray(lam, dtype=float)
    )
    x = np.sqrt(np.maximum(lam, 0.0))
    n_dir = np.floor(L * x / np.pi)
    with np.errstate(invalid="ignore"):
        extra = (L * x - 2.0 * np.arctan2(a, x) - n_dir * np.pi) >= 0.0
    extra &= ~np.isinf(a)
    n = n_dir + extra
    n = np.where(lam < 0.0, 0.0, n)
    return n.astype(np.int64)


def interval_count_below(length: float, bc: AlphaLike, lam: float) -> int:
    """Number of eigenvalues of the interval that are ``<= lam``."""
    length = check_positive(length, "length")
    bc = as_boundary(bc)
    if isinstance(lam, bool) or not isinstance(lam, (int, float)) or not lam > 0:
        raise DomainError(f"lambda must be > 0, got {lam!r}")
    return int(count_below(length, bc.alpha, float(lam)))


def phase_residual(length: float, bc: AlphaLike, k: int, lam: float) -> float:
    """Residual of the phase equation at ``lam`` (zero at the exact eigenvalue)."""
    bc = as_boundary(bc)
    x = math.sqrt(lam)
    return _phase_scalar(length, bc.alpha, x) - (k - 1) * math.pi


def tan_form_residual(length: float, alpha: float, k: int, lam: float) -> float:
    """Residual of the tangent/cotangent equation, scaled by ``sqrt(lam)``.

    Returns ``tan(L x / 2) - alpha / x`` for odd ``k`` and
    ``cot(L x / 2) + alpha / x`` for even ``k``; bounded near the root.
    """
    x = math.sqrt(lam)
    half = 0.5 * length * x
    if k % 2:
        return math.tan(half) - alpha / x
    return math.cos(half) / math.sin(half) + alpha / x
