"""Correlation-immunity deciders.

Five interchangeable checks, each answering "is this function t-th order
correlation immune?":

``definition``
    brute force over conditional output distributions (exact counts).
``walsh-component``
    every nonzero component v.f has a zero Walsh value at all u with
    1 <= wt(u) <= t.
``walsh-generalized``
    sum_x w_i^{g(x)} (-1)^{c.x} vanishes for 1 <= wt(c) <= t, 1 <= i <= m.
``fourier-generalized``
    the DFT of every variable-permuted sequence of g vanishes at
    2^(n-t') for every root index i and every order t' <= t.  Symmetric g
    skips the permutations.
``fourier-component``
    the same DFT test run on each single-output combination v.f.

All verdicts are exact; nothing is compared with a tolerance.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Callable, NamedTuple, Optional, Union

import numpy as np

from . import kernels, spectra
from .bfcore import (
    GeneralizedFunction,
    MultiOutputFunction,
    Permutation,
    all_permutations,
    component_combination,
    from_generalized,
    is_symmetric,
    permute_variables,
    to_generalized,
)
from .cyclotomic import CycloInt
from .spectra import SpectralPoint, SpectralReport, dft_level

DEFINITION = "definition"
WALSH_COMPONENT = "walsh-component"
WALSH_GENERALIZED = "walsh-generalized"
FOURIER_GENERALIZED = "fourier-generalized"
FOURIER_COMPONENT = "fourier-component"

METHODS = (DEFINITION, WALSH_COMPONENT, WALSH_GENERALIZED, FOURIER_GENERALIZED, FOURIER_COMPONENT)
FOURIER_METHODS = (FOURIER_GENERALIZED, FOURIER_COMPONENT)

DEFAULT_MAX_PERM_N = 8

AnyFunction = Union[MultiOutputFunction, GeneralizedFunction]


class PermutationLimitError(ValueError):
    """Raised when a check would enumerate S_n beyond the configured cap."""


@dataclass(frozen=True)
class DistributionCounts:
    """Output-value histogram; only nonzero counts are stored."""

    counts: dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def __getitem__(self, alpha: int) -> int:
        return self.counts.get(alpha, 0)

    @classmethod
    def from_array(cls, arr) -> DistributionCounts:
        return cls({int(a): int(c) for a, c in enumerate(arr) if c})


@dataclass
class CiVerdict:
    method: str
    order: int
    passed: bool
    witness: Optional[dict[str, Any]] = None
    evaluations: int = 0
    report: Optional[SpectralReport] = field(default=None, repr=False)

    def as_dict(self) -> dict:
        out: dict[str, Any] = {
            "method": self.method,
            "order": self.order,
            "passed": self.passed,
            "evaluations": self.evaluations,
        }
        if self.witness is not None:
            out["witness"] = {k: _jsonable(v) for k, v in self.witness.items()}
        return out


class CiOrder(NamedTuple):
    order: int
    verdicts: list[CiVerdict]


def _jsonable(v):
    if isinstance(v, CycloInt):
        return str(v)
    if isinstance(v, DistributionCounts):
        return {str(a): c for a, c in sorted(v.counts.items())}
    if isinstance(v, tuple):
        return list(v)
    return v


def as_generalized(fn: AnyFunction) -> GeneralizedFunction:
    return fn if isinstance(fn, GeneralizedFunction) else to_generalized(fn)


def as_multi_output(fn: AnyFunction) -> MultiOutputFunction:
    return fn if isinstance(fn, MultiOutputFunction) else from_generalized(fn)


def _check_order(t: int, n: int) -> None:
    if not 0 <= t <= n:
        raise ValueError(f"order t must be in 0..{n}, got {t}")


def _masks_of_weight(n: int, w: int):
    for positions in combinations(range(n), w):
        yield sum(1 << p for p in positions)


# --- definition oracle -----------------------------------------------------


def conditional_distribution(g: AnyFunction, positions, assignment) -> DistributionCounts:
    """Histogram of g over inputs with x_{positions[j]} = assignment[j] (1-based positions)."""
    g = as_generalized(g)
    positions = tuple(positions)
    assignment = tuple(assignment)
    if len(set(positions)) != len(positions):
        raise ValueError(f"duplicate positions in {positions}")
    if len(positions) != len(assignment):
        raise ValueError("positions and assignment differ in length")
    if any(not 1 <= p <= g.n for p in positions):
        raise ValueError(f"positions must lie in 1..{g.n}")
    table = kernels.conditional_counts(
        np.ascontiguousarray(g.values), np.array(positions, dtype=np.int64) - 1, g.modulus
    )
    row = sum((a & 1) << j for j, a in enumerate(assignment))
    return DistributionCounts.from_array(table[row])


def ci_check_definition(fn: AnyFunction, t: int, *, report: Optional[SpectralReport] = None, **_) -> CiVerdict:
    """Compare 2^t * (conditional counts) with the full counts for every t-subset.

    Fixing fewer than t coordinates is a mixture of t-fixings, so subsets of
    size exactly t decide the order.
    """
    g = as_generalized(fn)
    _check_order(t, g.n)
    verdict = CiVerdict(DEFINITION, t, True, report=report)
    if t == 0:
        return verdict
    values = np.ascontiguousarray(g.values)
    full = np.bincount(values, minlength=g.modulus)
    for positions in combinations(range(g.n), t):
        table = kernels.conditional_counts(values, np.array(positions, dtype=np.int64), g.modulus)
        bad_rows = np.flatnonzero(((table << t) != full[None, :]).any(axis=1))
        checked = (int(bad_rows[0]) + 1) if bad_rows.size else table.shape[0]
        verdict.evaluations += checked
        if report is not None:
            mask = sum(1 << p for p in positions)
            for row in range(checked):
                failed = bool(bad_rows.size) and row == bad_rows[0]
                report.add(SpectralPoint(mask=mask, order=t, v=row, vanished=not failed))
        if bad_rows.size:
            row = int(bad_rows[0])
            verdict.passed = False
            verdict.witness = {
                "positions": tuple(p + 1 for p in positions),
                "assignment": tuple((row >> j) & 1 for j in range(t)),
                "conditional": DistributionCounts.from_array(table[row]),
                "full": DistributionCounts.from_array(full),
            }
            return verdict
    return verdict


# --- Walsh criteria -------------------------------------------------------


def ci_check_walsh_component(fn: AnyFunction, t: int, *, start: int = 1,
                             report: Optional[SpectralReport] = None, **_) -> CiVerdict:
    """Zero Walsh values of every component v.f, v != 0, at 1 <= wt(u) <= t."""
    f = as_multi_output(fn)
    _check_order(t, f.n)
    verdict = CiVerdict(WALSH_COMPONENT, t, True, report=report)
    comps = np.ascontiguousarray(f.components)
    for v in range(1, 1 << f.m):
        bits = kernels.combine_components(comps, v)
        for w in range(max(start, 1), t + 1):
            for u in _masks_of_weight(f.n, w):
                value = kernels.walsh_component_point(bits, u)
                verdict.evaluations += 1
                if report is not None:
                    report.add(SpectralPoint(weight=w, mask=u, v=v, vanished=value == 0))
                if value != 0:
                    verdict.passed = False
                    verdict.witness = {"u": u, "v": v, "value": int(value)}
                    return verdict
    return verdict


def ci_check_walsh_generalized(fn: AnyFunction, t: int, *, start: int = 1,
                               report: Optional[SpectralReport] = None, **_) -> CiVerdict:
    """sum_x w_i^{g(x)} (-1)^{c.x} == 0 for 1 <= wt(c) <= t and 1 <= i <= m."""
    g = as_generalized(fn)
    _check_order(t, g.n)
    verdict = CiVerdict(WALSH_GENERALIZED, t, True, report=report)
    values = np.ascontiguousarray(g.values)
    for w in range(max(start, 1), t + 1):
        for c in _masks_of_weight(g.n, w):
            for i in range(1, g.m + 1):
                coeffs = kernels.walsh_generalized_coeffs(values, c, i)
                verdict.evaluations += 1
                vanished = not coeffs.any()
                if report is not None:
                    report.add(SpectralPoint(weight=w, mask=c, root=i, vanished=vanished))
                if not vanished:
                    verdict.passed = False
                    verdict.witness = {"c": c, "i": i, "value": CycloInt(i, coeffs.tolist())}
                    return verdict
    return verdict


# --- Fourier criteria -----------------------------------------------------


def _permutation_set(n: int, t: int, symmetric: bool, dedup: bool, max_perm_n: Optional[int]):
    if symmetric:
        return [Permutation.identity(n)]
    if max_perm_n is not None and n > max_perm_n:
        raise PermutationLimitError(
            f"n={n} exceeds the permutation-enumeration cap ({max_perm_n}); "
            f"enumerating S_{n} needs {math.factorial(n)} permutations"
        )
    perms = all_permutations(n)
    if not dedup:
        return perms  # lazy: a failing input usually stops at the identity
    # Only the inputs feeding new positions 1..t enter the DFT at 2^(n-t).
    seen = {}
    for pi in perms:
        key = tuple(pi.inverse().image[:t])
        seen.setdefault(key, pi)
    return list(seen.values())


def _fourier_orders(t: int, start: int, accumulate: bool) -> range:
    return range(max(start, 1), t + 1) if accumulate else range(t, t + 1)


def ci_check_fourier_generalized(fn: AnyFunction, t: int, *, start: int = 1, use_symmetry: bool = True,
                                 accumulate: bool = True, dedup: bool = False,
                                 max_perm_n: Optional[int] = DEFAULT_MAX_PERM_N,
                                 report: Optional[SpectralReport] = None, **_) -> CiVerdict:
    """DFT of pi.g at 2^(n-t') vanishes for all pi, all i and all t' <= t.

    ``accumulate=False`` tests the single order t only.  ``dedup`` keeps one
    permutation per ordered preimage of positions 1..t.
    """
    g = as_generalized(fn)
    _check_order(t, g.n)
    verdict = CiVerdict(FOURIER_GENERALIZED, t, True, report=report)
    if t == 0:
        return verdict
    symmetric = use_symmetry and is_symmetric(g)
    orders = _fourier_orders(t, start, accumulate)
    values = np.ascontiguousarray(g.values)
    for pi in _permutation_set(g.n, t, symmetric, dedup, max_perm_n):
        pvals = values if symmetric else kernels.permute_values(values, pi.as_array())
        for order in orders:
            j = 1 << (g.n - order)
            for i in range(1, g.m + 1):
                level = dft_level(g.n, i, j)
                coeffs = kernels.dft_coeffs(pvals, i, j, g.n, level)
                verdict.evaluations += 1
                vanished = not coeffs.any()
                if report is not None:
                    report.add(SpectralPoint(mask=j, root=i, order=order, permutation=pi.image, vanished=vanished))
                if not vanished:
                    verdict.passed = False
                    verdict.witness = {"permutation": pi.image, "order": order, "i": i,
                                       "value": CycloInt(level, coeffs.tolist())}
                    return verdict
    return verdict


def ci_check_fourier_component(fn: AnyFunction, t: int, *, start: int = 1, use_symmetry: bool = True,
                               accumulate: bool = True, dedup: bool = False,
                               max_perm_n: Optional[int] = DEFAULT_MAX_PERM_N,
                               report: Optional[SpectralReport] = None, **_) -> CiVerdict:
    """Single-output DFT criterion applied to every nonzero combination v.f."""
    f = as_multi_output(fn)
    _check_order(t, f.n)
    verdict = CiVerdict(FOURIER_COMPONENT, t, True, report=report)
    if t == 0:
        return verdict
    orders = _fourier_orders(t, start, accumulate)
    comps = np.ascontiguousarray(f.components)
    for v in range(1, 1 << f.m):
        bits = kernels.combine_components(comps, v)
        symmetric = use_symmetry and is_symmetric(GeneralizedFunction(f.n, 1, bits))
        for pi in _permutation_set(f.n, t, symmetric, dedup, max_perm_n):
            pbits = bits if symmetric else kernels.permute_values(bits, pi.as_array())
            for order in orders:
                j = 1 << (f.n - order)
                level = dft_level(f.n, 1, j)
                coeffs = kernels.dft_coeffs(pbits, 1, j, f.n, level)
                verdict.evaluations += 1
                vanished = not coeffs.any()
                if report is not None:
                    report.add(SpectralPoint(mask=j, root=1, v=v, order=order, permutation=pi.image,
                                             vanished=vanished))
                if not vanished:
                    verdict.passed = False
                    verdict.witness = {"v": v, "permutation": pi.image, "order": order,
                                       "value": CycloInt(level, coeffs.tolist())}
                    return verdict
    return verdict


CHECKS: dict[str, Callable[..., CiVerdict]] = {
    DEFINITION: ci_check_definition,
    WALSH_COMPONENT: ci_check_walsh_component,
    WALSH_GENERALIZED: ci_check_walsh_generalized,
    FOURIER_GENERALIZED: ci_check_fourier_generalized,
    FOURIER_COMPONENT: ci_check_fourier_component,
}


def ci_check(fn: AnyFunction, t: int, method: str, **options) -> CiVerdict:
    try:
        check = CHECKS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; expected one of {', '.join(METHODS)}") from None
    return check(fn, t, **options)


def ci_order(fn: AnyFunction, method: str, **options) -> CiOrder:
    """Largest t for which ``method`` passes, found by increasing t until the first failure.

    Each step only checks the new order; lower orders already passed.
    """
    n = fn.n
    verdicts = []
    for t in range(1, n + 1):
        verdict = ci_check(fn, t, method, start=t, **options)
        verdicts.append(verdict)
        if not verdict.passed:
            return CiOrder(t - 1, verdicts)
    return CiOrder(n, verdicts)


def op_count(method: str, n: int, m: int, t: int, symmetric: bool = False) -> int:
    """Number of spectral points (or subset assignments) a passing check evaluates."""
    if t <= 0:
        return 0
    low_weight = sum(math.comb(n, j) for j in range(1, t + 1))
    perms = 1 if symmetric else math.factorial(n)
    if method == WALSH_COMPONENT:
        return ((1 << m) - 1) * low_weight
    if method == WALSH_GENERALIZED:
        return m * low_weight
    if method == FOURIER_GENERALIZED:
        return perms * m * t
    if method == FOURIER_COMPONENT:
        return perms * ((1 << m) - 1) * t
    if method == DEFINITION:
        return math.comb(n, t) << t
    raise ValueError(f"unknown method {method!r}")


def recheck_witness(fn: AnyFunction, verdict: CiVerdict) -> bool:
    """Re-evaluate a failing verdict's witness; True when the failure reproduces."""
    w = verdict.witness
    if w is None:
        return False
    if verdict.method == DEFINITION:
        g = as_generalized(fn)
        cond = conditional_distribution(g, w["positions"], w["assignment"])
        full = conditional_distribution(g, (), ())
        return any((cond[a] << len(w["positions"])) != full[a] for a in range(g.modulus))
    if verdict.method == WALSH_COMPONENT:
        return spectra.walsh_component(as_multi_output(fn), w["u"], w["v"]) != 0
    if verdict.method == WALSH_GENERALIZED:
        return not spectra.walsh_generalized(as_generalized(fn), w["c"], w["i"]).is_zero()
    j = 1 << (fn.n - w["order"])
    pi = Permutation(w["permutation"])
    if verdict.method == FOURIER_GENERALIZED:
        g = permute_variables(as_generalized(fn), pi)
        return not spectra.dft_point(g, w["i"], j).is_zero()
    if verdict.method == FOURIER_COMPONENT:
        bits = component_combination(as_multi_output(fn), w["v"])
        g = permute_variables(GeneralizedFunction(fn.n, 1, bits), pi)
        return not spectra.dft_point(g, 1, j).is_zero()
    raise ValueError(f"unknown method {verdict.method!r}")
