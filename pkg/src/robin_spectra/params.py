"""Boundary parameters, errors and input validation shared by every module."""
from __future__ import annotations

import math
from dataclasses import dataclass
from numbers import Integral, Real
from typing import Union


class DomainError(ValueError):
    """Raised when an input lies outside the domain of an operation."""


@dataclass(frozen=True)
class BoundaryParam:
    """Robin coefficient alpha >= 0, or the Dirichlet limit.

    Dirichlet is a separate state (``value is None``); it is never stored as
    a large float.
    """

    value: float | None = 0.0

    def __post_init__(self):
        if self.value is None:
            return
        v = float(self.value)
        if math.isnan(v) or v < 0 or math.isinf(v):
            raise DomainError(f"Robin coefficient must be finite and >= 0, got {self.value!r}")
        object.__setattr__(self, "value", v)

    @classmethod
    def dirichlet(cls) -> "BoundaryParam":
        return cls(None)

    @classmethod
    def neumann(cls) -> "BoundaryParam":
        return cls(0.0)

    @property
    def is_dirichlet(self) -> bool:
        return self.value is None

    @property
    def is_neumann(self) -> bool:
        return self.value == 0.0

    @property
    def alpha(self) -> float:
        """Numeric coefficient, ``math.inf`` for Dirichlet (arctan-safe)."""
        return math.inf if self.value is None else self.value

    def scaled(self, factor: float) -> "BoundaryParam":
        """Coefficient multiplied by ``factor`` (Dirichlet stays Dirichlet)."""
        if self.value is None:
            return self
        return BoundaryParam(self.value * factor)

    def to_json(self) -> float | str:
        return "dirichlet" if self.value is None else self.value

    def __str__(self) -> str:
        return "dirichlet" if self.value is None else repr(self.value)


DIRICHLET = BoundaryParam.dirichlet()
NEUMANN = BoundaryParam.neumann()

AlphaLike = Union[BoundaryParam, float, int, str]


def as_boundary(alpha: AlphaLike) -> BoundaryParam:
    """Coerce a float, ``"dirichlet"`` or a BoundaryParam to a BoundaryParam.

    ``math.inf`` is accepted as a spelling of the Dirichlet state.
    """
    if isinstance(alpha, BoundaryParam):
        return alpha
    if isinstance(alpha, str):
        s = alpha.strip().lower()
        if s in ("dirichlet", "inf", "infinity"):
            return DIRICHLET
        try:
            alpha = float(s)
        except ValueError:
            raise DomainError(f"cannot interpret {alpha!r} as a boundary parameter") from None
    if isinstance(alpha, bool) or not isinstance(alpha, Real):
        raise DomainError(f"cannot interpret {alpha!r} as a boundary parameter")
    if math.isinf(alpha) and alpha > 0:
        return DIRICHLET
    return BoundaryParam(float(alpha))


def check_positive(x, name: str) -> float:
    if isinstance(x, bool) or not isinstance(x, Real):
        raise DomainError(f"{name} must be a real number, got {x!r}")
    x = float(x)
    if not (x > 0) or math.isinf(x):
        raise DomainError(f"{name} must be positive and finite, got {x!r}")
    return x


def check_index(k, name: str = "k") -> int:
    if isinstance(k, bool) or not isinstance(k, Integral):
        raise DomainError(f"{name} must be a positive integer, got {k!r}")
    if k < 1:
        raise DomainError(f"{name} must be >= 1, got {k}")
    return int(k)


def check_robin(alpha: AlphaLike, name: str = "alpha") -> float:
    """Finite, strictly positive Robin coefficient (for closed-form bounds)."""
    bc = as_boundary(alpha)
    if bc.is_dirichlet or not bc.value > 0:
        raise DomainError(f"{name} must be finite and > 0, got {alpha!r}")
    return bc.value
