"""Exhaustive and sampled agreement sweeps across the CI deciders."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .bfcore import GeneralizedFunction
from .ci import DEFINITION, FOURIER_METHODS, METHODS, ci_check

DEFAULT_UNIVERSE_LIMIT = 1 << 20


def universe_size(n: int, m: int) -> int:
    return 1 << (m << n)


def all_functions(n: int, m: int, chunk: int = 4096) -> Iterator[GeneralizedFunction]:
    """Every (n, m)-function, enumerated by the integer whose base-2^m digits are the values."""
    size = 1 << n
    total = universe_size(n, m)
    digits = np.arange(size, dtype=np.int64) * m
    mask = (1 << m) - 1
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        table = (idx[:, None] >> digits[None, :]) & mask
        for row in table:
            yield GeneralizedFunction(n, m, row)


def random_functions(n: int, m: int, count: int, rng: np.random.Generator) -> Iterator[GeneralizedFunction]:
    for _ in range(count):
        yield GeneralizedFunction(n, m, rng.integers(0, 1 << m, size=1 << n))


@dataclass
class SweepResult:
    n: int
    m: int
    methods: tuple[str, ...]
    orders: tuple[int, ...]
    functions: int = 0
    disagreements: list[dict] = field(default_factory=list)
    pair_disagreements: Counter = field(default_factory=Counter)
    order_histogram: dict[str, Counter] = field(default_factory=dict)
    single_order_mismatches: Optional[Counter] = None

    @property
    def agree(self) -> bool:
        return not self.disagreements

    def as_dict(self, max_examples: int = 20) -> dict:
        out = {
            "n": self.n,
            "m": self.m,
            "methods": list(self.methods),
            "orders": list(self.orders),
            "functions": self.functions,
            "disagreements": len(self.disagreements),
            "disagreement_examples": self.disagreements[:max_examples],
            "agreement_matrix": {
                f"{a}|{b}": self.pair_disagreements.get((a, b), 0) for a, b in combinations(self.methods, 2)
            },
            "ci_order_distribution": {
                meth: {str(k): v for k, v in sorted(hist.items())} for meth, hist in self.order_histogram.items()
            },
        }
        if self.single_order_mismatches is not None:
            out["single_order_mismatches"] = dict(self.single_order_mismatches)
        return out


def run_sweep(functions: Iterable[GeneralizedFunction], n: int, m: int,
              methods: Sequence[str] = METHODS, orders: Optional[Sequence[int]] = None,
              probe_single_order: bool = False, **options) -> SweepResult:
    """Check every function at every order with every method and tally disagreements.

    The CI order per method is read off the per-order flags (largest t such
    that all orders 1..t pass).  ``probe_single_order`` additionally runs the
    Fourier checks at order t alone, without orders below t, and counts the
    cases where that reading differs from the definition oracle.
    """
    methods = tuple(methods)
    orders = tuple(orders) if orders is not None else tuple(range(1, n + 1))
    result = SweepResult(n, m, methods, orders, order_histogram={meth: Counter() for meth in methods})
    if probe_single_order:
        result.single_order_mismatches = Counter()
    full_range = orders == tuple(range(1, n + 1))
    for g in functions:
        result.functions += 1
        flags = {meth: [ci_check(g, t, meth, **options).passed for t in orders] for meth in methods}
        for a, b in combinations(methods, 2):
            if flags[a] != flags[b]:
                result.pair_disagreements[(a, b)] += 1
        if len({tuple(f) for f in flags.values()}) > 1:
            result.disagreements.append({"values": [int(v) for v in g.values], "flags": flags})
        if full_range:
            for meth in methods:
                order = 0
                for ok in flags[meth]:
                    if not ok:
                        break
                    order += 1
                result.order_histogram[meth][order] += 1
        if probe_single_order:
            reference = flags[DEFINITION] if DEFINITION in flags else [
                ci_check(g, t, DEFINITION).passed for t in orders]
            for meth in FOURIER_METHODS:
                single = [ci_check(g, t, meth, accumulate=False, **options).passed for t in orders]
                for t, ok, ref in zip(orders, single, reference):
                    if ok != ref:
                        result.single_order_mismatches[f"{meth}@t={t}"] += 1
    return result
