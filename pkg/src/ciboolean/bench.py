"""Spectral-point counting and timing for the two Walsh criteria."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .bfcore import GeneralizedFunction
from .ci import WALSH_COMPONENT, WALSH_GENERALIZED, ci_check, op_count


@dataclass
class CountResult:
    n: int
    m: int
    t: int
    component_count: int
    generalized_count: int
    component_expected: int
    generalized_expected: int

    @property
    def matches(self) -> bool:
        return (self.component_count == self.component_expected
                and self.generalized_count == self.generalized_expected)

    @property
    def ratio(self) -> Optional[Fraction]:
        if not self.generalized_count:
            return None
        return Fraction(self.component_count, self.generalized_count)

    def as_dict(self) -> dict:
        ratio = self.ratio
        return {
            "n": self.n, "m": self.m, "t": self.t,
            "walsh_component": {"measured": self.component_count, "expected": self.component_expected},
            "walsh_generalized": {"measured": self.generalized_count, "expected": self.generalized_expected},
            "ratio": None if ratio is None else str(ratio),
            "matches": self.matches,
        }


def measure_counts(n: int, m: int, t: int, g: Optional[GeneralizedFunction] = None) -> CountResult:
    """Run both Walsh checks on a passing input (a constant by default) and record point counts."""
    if g is None:
        g = GeneralizedFunction.constant(n, m, 0)
    comp = ci_check(g, t, WALSH_COMPONENT)
    gen = ci_check(g, t, WALSH_GENERALIZED)
    return CountResult(n, m, t, comp.evaluations, gen.evaluations,
                       op_count(WALSH_COMPONENT, n, m, t), op_count(WALSH_GENERALIZED, n, m, t))


@dataclass
class TimingResult:
    samples: int
    seconds: dict[str, float] = field(default_factory=dict)
    evaluations: dict[str, int] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"samples": self.samples, "seconds": self.seconds, "evaluations": self.evaluations}


def time_methods(functions: Sequence[GeneralizedFunction], t: int,
                 methods: Sequence[str] = (WALSH_COMPONENT, WALSH_GENERALIZED), repeat: int = 1) -> TimingResult:
    """Wall-clock for each method over the same inputs.  Informative only."""
    result = TimingResult(len(functions))
    for meth in methods:
        best = float("inf")
        evals = 0
        for _ in range(repeat):
            evals = 0
            start = time.perf_counter()
            for g in functions:
                evals += ci_check(g, t, meth).evaluations
            best = min(best, time.perf_counter() - start)
        result.seconds[meth] = best
        result.evaluations[meth] = evals
    return result


def run_bench(n: int, m: int, t: int, samples: int = 0, seed: int = 0,
              inputs: Optional[Sequence[GeneralizedFunction]] = None) -> dict:
    counts = measure_counts(n, m, t)
    if inputs is None:
        rng = np.random.default_rng(seed)
        inputs = [GeneralizedFunction(n, m, rng.integers(0, 1 << m, size=1 << n)) for _ in range(samples)]
    constant = [GeneralizedFunction.constant(n, m, 0)]
    out = {
        "counts": counts.as_dict(),
        "timing_constant": time_methods(constant, t, repeat=3).as_dict(),
    }
    if inputs:
        out["timing_inputs"] = time_methods(list(inputs), t).as_dict()
    return out
