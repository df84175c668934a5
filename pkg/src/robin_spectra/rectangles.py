"""Spectra of rectangles and finite disjoint unions of rectangles.

A rectangle of area ``A`` and aspect ``a >= 1`` has sides ``sqrt(A) a`` (the
long side, mode index ``i``) and ``sqrt(A)/a`` (index ``j``).  Its
eigenvalues are the sums ``mu_i(long) + mu_j(short)`` of interval
eigenvalues.  Equal values are ordered lexicographically in ``(i, j)``,
and across the components of a union by component index.
"""
from __future__ import annotations

import heapq
import json
import math
import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .interval import count_below, interval_eigenvalue, interval_eigenvalues
from .params import AlphaLike, BoundaryParam, DomainError, as_boundary, check_index, check_positive

__all__ = [
    "RectSpec",
    "ModeIndex",
    "ModeEigen",
    "UnionSpec",
    "UnionEigen",
    "mode_eigenvalue",
    "rect_eigenvalue",
    "rect_eigenvalues",
    "rect_counting",
    "rect_kth_value",
    "rect_kth_values",
    "union_eigenvalue",
    "equal_squares_eigenvalue",
    "is_k1_mode",
]


@dataclass(frozen=True)
class RectSpec:
    """Rectangle of area ``area`` and aspect ``aspect >= 1``."""

    area: float
    aspect: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "area", check_positive(self.area, "area"))
        aspect = check_positive(self.aspect, "aspect")
        if aspect < 1.0:
            raise DomainError(f"aspect must be >= 1 (canonical orientation), got {aspect!r}")
        object.__setattr__(self, "aspect", aspect)

    @classmethod
    def from_sides(cls, s1: float, s2: float) -> "RectSpec":
        s1, s2 = check_positive(s1, "side"), check_positive(s2, "side")
        long, short = max(s1, s2), min(s1, s2)
        return cls(long * short, math.sqrt(long / short))

    @property
    def long_side(self) -> float:
        return math.sqrt(self.area) * self.aspect

    @property
    def short_side(self) -> float:
        return math.sqrt(self.area) / self.aspect

    @property
    def sides(self) -> tuple[float, float]:
        return self.long_side, self.short_side

    def to_json(self) -> dict:
        return {"area": self.area, "aspect": self.aspect}

    @classmethod
    def from_json(cls, obj: dict) -> "RectSpec":
        try:
            return cls(float(obj["area"]), float(obj.get("aspect", 1.0)))
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"invalid rectangle description {obj!r}: {exc}") from None


class ModeIndex(NamedTuple):
    i: int
    j: int


@dataclass(frozen=True)
class ModeEigen:
    value: float
    mode: ModeIndex

    def to_json(self) -> dict:
        return {"value": self.value, "mode": [self.mode.i, self.mode.j]}


@dataclass(frozen=True)
class UnionSpec:
    """Disjoint union of rectangles; each component carries its absolute area."""

    components: tuple[RectSpec, ...]

    def __post_init__(self):
        comps = tuple(self.components)
        if not comps:
            raise DomainError("a union needs at least one component")
        for c in comps:
            if not isinstance(c, RectSpec):
                raise DomainError(f"union components must be RectSpec, got {c!r}")
        object.__setattr__(self, "components", comps)

    @property
    def total_area(self) -> float:
        return math.fsum(c.area for c in self.components)

    def __len__(self) -> int:
        return len(self.components)

    def to_json(self) -> dict:
        return {"components": [c.to_json() for c in self.components]}

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, obj) -> "UnionSpec":
        if isinstance(obj, str):
            obj = json.loads(obj)
        if not isinstance(obj, dict) or not isinstance(obj.get("components"), list):
            raise DomainError('union spec must be {"components": [{"area": .., "aspect": ..}, ...]}')
        return cls(tuple(RectSpec.from_json(c) for c in obj["components"]))

    @classmethod
    def equal_squares(cls, k: int, area: float) -> "UnionSpec":
        k = check_index(k)
        area = check_positive(area, "area")
        return cls(tuple(RectSpec(area / k, 1.0) for _ in range(k)))


class UnionEigen(NamedTuple):
    value: float
    component: int
    index: int


# -- one-dimensional spectra cached per side --------------------------------


class _SideSpectrum:
    """Lazily extended list of interval eigenvalues for one side length."""

    _CHUNK = 64

    def __init__(self, length: float, alpha: float):
        self.length = length
        self.alpha = alpha
        self._values = np.empty(0)
        self._lock = threading.Lock()

    def upto(self, n: int) -> np.ndarray:
        if n > self._values.size:
            with self._lock:
                if n > self._values.size:
                    m = max(n, 2 * self._values.size, self._CHUNK)
                    ks = np.arange(self._values.size + 1, m + 1)
                    new = interval_eigenvalues(self.length, self.alpha, ks)
                    self._values = np.concatenate([self._values, new])
        return self._values

    def __getitem__(self, i: int) -> float:
        return float(self.upto(i)[i - 1])


@lru_cache(maxsize=4096)
def _side(length: float, alpha: float) -> _SideSpectrum:
    return _SideSpectrum(length, alpha)


class _RectSpectrum:
    """Best-first enumeration of one rectangle's eigenvalues with a cached prefix."""

    def __init__(self, rect: RectSpec, bc: BoundaryParam):
        self.s1 = _side(rect.long_side, bc.alpha)
        self.s2 = _side(rect.short_side, bc.alpha)
        self._prefix: list[ModeEigen] = []
        self._heap: list[tuple[float, int, int]] = []
        self._seen: set[tuple[int, int]] = set()
        self._lock = threading.Lock()
        self._push(1, 1)

    def _push(self, i: int, j: int) -> None:
        if (i, j) not in self._seen:
            self._seen.add((i, j))
            heapq.heappush(self._heap, (self.s1[i] + self.s2[j], i, j))

    def prefix(self, n: int) -> list[ModeEigen]:
        if n > len(self._prefix):
            with self._lock:
                while len(self._prefix) < n:
                    value, i, j = heapq.heappop(self._heap)
                    self._prefix.append(ModeEigen(value, ModeIndex(i, j)))
                    self._push(i + 1, j)
                    self._push(i, j + 1)
        return self._prefix

    def __getitem__(self, k: int) -> ModeEigen:
        return self.prefix(k)[k - 1]


@lru_cache(maxsize=1024)
def _rect_spectrum(rect: RectSpec, bc: BoundaryParam) -> _RectSpectrum:
    return _RectSpectrum(rect, bc)


# -- public operations -----------------------------------------------------


def mode_eigenvalue(rect: RectSpec, bc: AlphaLike, mode) -> ModeEigen:
    """Eigenvalue of the ``(i, j)`` mode: ``mu_i(long side) + mu_j(short side)``."""
    bc = as_boundary(bc)
    mode = ModeIndex(check_index(mode[0], "i"), check_index(mode[1], "j"))
    value = interval_eigenvalue(rect.long_side, bc, mode.i) + interval_eigenvalue(rect.short_side, bc, mode.j)
    return ModeEigen(value, mode)


def rect_eigenvalue(rect: RectSpec, bc: AlphaLike, k: int) -> ModeEigen:
    """k-th eigenvalue of the rectangle together with its mode."""
    k = check_index(k)
    return _rect_spectrum(rect, as_boundary(bc))[k]


def rect_eigenvalues(rect: RectSpec, bc: AlphaLike, k: int) -> list[ModeEigen]:
    """The first k eigenvalues in order."""
    k = check_index(k)
    return list(_rect_spectrum(rect, as_boundary(bc)).prefix(k)[:k])


def rect_counting(rect: RectSpec, bc: AlphaLike, lam: float) -> int:
    """Exact number of eigenvalues ``<= lam``.

    Rows are indexed by the long side: each long-side eigenvalue ``mu_i <= lam``
    contributes the short-side count below ``lam - mu_i``.
    """
    bc = as_boundary(bc)
    if not lam >= 0:
        raise DomainError(f"lambda must be >= 0, got {lam!r}")
    return _count(rect.long_side, rect.short_side, bc.alpha, float(lam))


def _count(row_len: float, col_len: float, alpha: float, lam: float) -> int:
    n_rows = int(count_below(row_len, alpha, lam))
    if n_rows == 0:
        return 0
    mu = interval_eigenvalues(row_len, alpha, np.arange(1, n_rows + 1))
    return int(count_below(col_len, alpha, lam - mu).sum())


def _dirichlet_upper(k: int, l1: float, l2: float) -> float:
    """Dirichlet bound on lambda_k: fill M short-side rows with ceil(k/M) modes each."""
    m = np.arange(1, min(k, 1 + int(4 * math.sqrt(k) * max(l2 / l1, l1 / l2))) + 1)
    vals = math.pi**2 * (np.ceil(k / m) ** 2 / l1**2 + m**2 / l2**2)
    return float(vals.min())


def rect_kth_value(area: float, aspect: float, alpha: float, k: int) -> float:
    """k-th eigenvalue by bisection on the counting function (fast for large k).

    ``alpha`` is a plain float (``inf`` for Dirichlet).  Rows run over the
    short side so the work per count is ``O(sqrt(lam) * short side)``.
    """
    long_ = math.sqrt(area) * aspect
    short = math.sqrt(area) / aspect
    hi = _dirichlet_upper(k, long_, short)
    lo = 0.0
    if _count(short, long_, alpha, hi) < k:  # cannot happen; guards rounding at the Dirichlet limit
        hi *= 1.0 + 1e-12
    for _ in range(200):
        if hi - lo <= 1e-13 * hi:
            break
        mid = 0.5 * (lo + hi)
        if _count(short, long_, alpha, mid) >= k:
            hi = mid
        else:
            lo = mid
    # snap to the exact mode value: the largest mode value not above hi
    n_rows = int(count_below(short, alpha, hi))
    rows = np.arange(1, n_rows + 1)
    mu = interval_eigenvalues(short, alpha, rows)
    cols = count_below(long_, alpha, hi - mu)
    keep = cols > 0
    vals = mu[keep] + interval_eigenvalues(long_, alpha, cols[keep])
    return float(vals.max())


def rect_kth_values(area: float, aspects, alpha: float, k: int) -> np.ndarray:
    """k-th eigenvalue for many aspects at once by a full mode table (small k)."""
    aspects = np.asarray(aspects, dtype=float).reshape(-1)
    long_ = math.sqrt(area) * aspects[:, None]
    short = math.sqrt(area) / aspects[:, None]
    idx = np.arange(1, k + 1)
    mu1 = interval_eigenvalues(long_, alpha, idx[None, :])
    mu2 = interval_eigenvalues(short, alpha, idx[None, :])
    # the k-th mode (i, j) always has i * j <= k
    ii, jj = _mode_pairs(k)
    table = mu1[:, ii - 1] + mu2[:, jj - 1]
    return np.partition(table, k - 1, axis=1)[:, k - 1]


@lru_cache(maxsize=512)
def _mode_pairs(k: int) -> tuple[np.ndarray, np.ndarray]:
    ii, jj = [], []
    for i in range(1, k + 1):
        for j in range(1, k // i + 1):
            ii.append(i)
            jj.append(j)
    return np.array(ii), np.array(jj)


def union_eigenvalue(union: UnionSpec, bc: AlphaLike, k: int) -> UnionEigen:
    """k-th eigenvalue of a disjoint union.

    Returns the value, the 0-based component index it comes from and its
    1-based index within that component's spectrum.
    """
    k = check_index(k)
    bc = as_boundary(bc)
    spectra = [_rect_spectrum(c, bc) for c in union.components]
    heap = [(s[1].value, c, 1) for c, s in enumerate(spectra)]
    heapq.heapify(heap)
    for _ in range(k - 1):
        _, c, idx = heapq.heappop(heap)
        heapq.heappush(heap, (spectra[c][idx + 1].value, c, idx + 1))
    value, c, idx = heap[0]
    return UnionEigen(value, c, idx)


def equal_squares_eigenvalue(k: int, area: float, alpha: AlphaLike) -> float:
    """k-th eigenvalue of k equal squares of total area ``area``: ``2 mu_1(sqrt(A/k))``."""
    k = check_index(k)
    area = check_positive(area, "area")
    return 2.0 * interval_eigenvalue(math.sqrt(area / k), alpha, 1)


def is_k1_mode(rect: RectSpec, bc: AlphaLike, k: int) -> bool:
    """Whether the k-th eigenvalue of the rectangle is attained by the ``(k, 1)`` mode."""
    return rect_eigenvalue(rect, bc, k).mode == (k, 1)


def merge_sorted(spectra: Sequence[Iterable[float]]) -> list[float]:
    """Merge already sorted value lists (helper for tests and reports)."""
    return list(heapq.merge(*spectra))
