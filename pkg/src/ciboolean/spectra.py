"""Spectral transforms with exact values.

* ``walsh_component``: integer Walsh value of the component v.f at u.
* ``walsh_generalized``: sum_x w_i^{g(x)} (-1)^{c.x} at ring level i.
* ``dft_point`` / ``assoc_poly_eval``: sum_k w_i^{g(k)} xi^{-kj}, xi = zeta_{2^n}.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import kernels
from .bfcore import (
    GeneralizedFunction,
    MultiOutputFunction,
    Permutation,
    component_combination,
    permute_variables,
)
from .cyclotomic import CycloInt


@dataclass(frozen=True)
class SpectralPoint:
    """One evaluated point.  Unused fields stay None."""

    weight: Optional[int] = None
    mask: Optional[int] = None
    root: Optional[int] = None
    v: Optional[int] = None
    order: Optional[int] = None
    permutation: Optional[tuple[int, ...]] = None
    vanished: bool = True

    def as_dict(self) -> dict:
        return {k: (list(val) if isinstance(val, tuple) else val) for k, val in self.__dict__.items() if val is not None}


@dataclass
class SpectralReport:
    method: str
    points: list[SpectralPoint] = field(default_factory=list)

    @property
    def evaluations(self) -> int:
        return len(self.points)

    @property
    def vanished(self) -> int:
        return sum(p.vanished for p in self.points)

    def add(self, point: SpectralPoint) -> None:
        self.points.append(point)

    def as_dict(self) -> dict:
        return {
            "method": self.method,
            "evaluations": self.evaluations,
            "vanished": self.vanished,
            "points": [p.as_dict() for p in self.points],
        }


def _check_v(v: int, m: int) -> None:
    if not 0 < v < (1 << m):
        raise ValueError(f"v must be a nonzero {m}-bit mask, got {v}")


def _check_mask(u: int, n: int) -> None:
    if not 0 <= u < (1 << n):
        raise ValueError(f"mask must be an {n}-bit value, got {u}")


def _check_root(i: int, m: int) -> None:
    if not 1 <= i <= m:
        raise ValueError(f"root index i must be in 1..{m}, got {i}")


def walsh_component(f: MultiOutputFunction, u: int, v: int) -> int:
    _check_v(v, f.m)
    _check_mask(u, f.n)
    return int(kernels.walsh_component_point(component_combination(f, v), u))


def fast_walsh_all(f: MultiOutputFunction, v: int) -> np.ndarray:
    """All 2^n Walsh values of v.f, indexed by u."""
    _check_v(v, f.m)
    signs = 1 - 2 * component_combination(f, v)
    return kernels.fwht(signs)


def walsh_generalized(g: GeneralizedFunction, c: int, i: int) -> CycloInt:
    _check_root(i, g.m)
    _check_mask(c, g.n)
    return CycloInt(i, kernels.walsh_generalized_coeffs(np.ascontiguousarray(g.values), c, i).tolist())


def dft_level(n: int, i: int, j: int) -> int:
    """Smallest ring level holding both w_i and xi^{-j}."""
    if j == 0:
        return i
    v2 = (j & -j).bit_length() - 1
    return max(i, n - v2)


def dft_coefficients(values: np.ndarray, n: int, i: int, j: int) -> tuple[int, np.ndarray]:
    level = dft_level(n, i, j)
    return level, kernels.dft_coeffs(values, i, j, n, level)


def dft_point(g: GeneralizedFunction, i: int, j: int) -> CycloInt:
    _check_root(i, g.m)
    if not 0 <= j < (1 << g.n):
        raise ValueError(f"frequency j must be in 0..{(1 << g.n) - 1}, got {j}")
    level, coeffs = dft_coefficients(np.ascontiguousarray(g.values), g.n, i, j)
    return CycloInt(level, coeffs.tolist())


def assoc_poly_eval(g: GeneralizedFunction, i: int, t: int) -> CycloInt:
    """F^{(i)}(z) = sum_k w_i^{g(k)} z^k evaluated at z = xi^(-2^(n-t))."""
    if not 1 <= t <= g.n:
        raise ValueError(f"order t must be in 1..{g.n}, got {t}")
    return dft_point(g, i, 1 << (g.n - t))


def permuted_dft_point(g: GeneralizedFunction, pi: Permutation, i: int, j: int) -> CycloInt:
    return dft_point(permute_variables(g, pi), i, j)
