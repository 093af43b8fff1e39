"""Representations of (n, m)-functions and conversions among them.

Index convention used everywhere in the package: input x = (x_1, ..., x_n)
sits at index k = sum_i x_i 2^(i-1), so x_1 is the least-significant bit.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as _permutations
from typing import Callable, Iterator, Sequence

import numpy as np

from . import kernels

MAX_N = 24
MAX_M = 16


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=np.int64, copy=True)
    a.setflags(write=False)
    return a


def _check_limits(n: int, m: int) -> None:
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must be in 1..{MAX_N}, got {n}")
    if not 1 <= m <= MAX_M:
        raise ValueError(f"m must be in 1..{MAX_M}, got {m}")


@dataclass(frozen=True, eq=False)
class MultiOutputFunction:
    """Truth table of an (n, m)-function, one 0/1 row per component f_i."""

    n: int
    m: int
    components: np.ndarray

    def __post_init__(self):
        _check_limits(self.n, self.m)
        comps = np.asarray(self.components)
        if comps.shape != (self.m, 1 << self.n):
            raise ValueError(f"components must have shape ({self.m}, {1 << self.n}), got {comps.shape}")
        if comps.size and (comps.min() < 0 or comps.max() > 1):
            raise ValueError("component entries must be 0 or 1")
        object.__setattr__(self, "components", _frozen(comps))

    @classmethod
    def from_columns(cls, n: int, columns: Sequence[Sequence[int]]) -> MultiOutputFunction:
        return cls(n, len(columns), np.array(columns, dtype=np.int64))

    @classmethod
    def from_callable(cls, n: int, m: int, fn: Callable[[tuple[int, ...]], Sequence[int]]) -> MultiOutputFunction:
        """Tabulate ``fn(x)`` where x = (x_1, ..., x_n) and fn returns (f_1, ..., f_m)."""
        comps = np.zeros((m, 1 << n), dtype=np.int64)
        for k in range(1 << n):
            x = tuple((k >> b) & 1 for b in range(n))
            out = fn(x)
            for i in range(m):
                comps[i, k] = out[i] & 1
        return cls(n, m, comps)

    def __eq__(self, other):
        if not isinstance(other, MultiOutputFunction):
            return NotImplemented
        return self.n == other.n and self.m == other.m and np.array_equal(self.components, other.components)

    def __hash__(self):
        return hash((self.n, self.m, self.components.tobytes()))


@dataclass(frozen=True, eq=False)
class GeneralizedFunction:
    """The same object seen as a map F_2^n -> Z_{2^m}; values[k] = f_g(k)."""

    n: int
    m: int
    values: np.ndarray

    def __post_init__(self):
        _check_limits(self.n, self.m)
        vals = np.asarray(self.values)
        if vals.shape != (1 << self.n,):
            raise ValueError(f"expected {1 << self.n} values, got {vals.size}")
        if vals.size and (vals.min() < 0 or vals.max() >= (1 << self.m)):
            raise ValueError(f"values must lie in [0, {(1 << self.m) - 1}]")
        object.__setattr__(self, "values", _frozen(vals))

    @classmethod
    def constant(cls, n: int, m: int, value: int = 0) -> GeneralizedFunction:
        return cls(n, m, np.full(1 << n, value % (1 << m), dtype=np.int64))

    @property
    def modulus(self) -> int:
        return 1 << self.m

    def __call__(self, x: Sequence[int]) -> int:
        """Evaluate at x = (x_1, ..., x_n)."""
        return int(self.values[sum((b & 1) << j for j, b in enumerate(x))])

    def __eq__(self, other):
        if not isinstance(other, GeneralizedFunction):
            return NotImplemented
        return self.n == other.n and self.m == other.m and np.array_equal(self.values, other.values)

    def __hash__(self):
        return hash((self.n, self.m, self.values.tobytes()))


@dataclass(frozen=True)
class GeneralizedAnf:
    """Z_{2^m}-linear combination of monomials; key = bitmask of the variables."""

    n: int
    m: int
    coeffs: dict[int, int]

    def evaluate(self) -> GeneralizedFunction:
        k = np.arange(1 << self.n, dtype=np.int64)
        acc = np.zeros(1 << self.n, dtype=np.int64)
        for mono, coef in self.coeffs.items():
            acc += coef * ((k & mono) == mono)
        return GeneralizedFunction(self.n, self.m, acc % (1 << self.m))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        order = sorted(self.coeffs, key=lambda s: (-bin(s).count("1"), _mask_positions(s)))
        for mono in order:
            coef = self.coeffs[mono]
            factors = [f"x{p}" for p in _mask_positions(mono)]
            if coef != 1 or not factors:
                factors.insert(0, str(coef))
            terms.append("*".join(factors))
        return " + ".join(terms)


def _mask_positions(mask: int) -> tuple[int, ...]:
    """1-based variable indices set in ``mask``."""
    return tuple(b + 1 for b in range(mask.bit_length()) if (mask >> b) & 1)


@dataclass(frozen=True)
class Permutation:
    """Bijection on {1..n}; image[j-1] = pi(j).

    Acts on functions by (pi . g)(x_1..x_n) = g(x_pi(1), ..., x_pi(n)).
    With (pi * sigma)(j) = pi(sigma(j)) this is a left action:
    pi . (sigma . g) == (pi * sigma) . g.
    """

    image: tuple[int, ...]

    def __post_init__(self):
        image = tuple(int(p) for p in self.image)
        if sorted(image) != list(range(1, len(image) + 1)):
            raise ValueError(f"not a permutation of 1..{len(image)}: {image}")
        object.__setattr__(self, "image", image)

    @property
    def n(self) -> int:
        return len(self.image)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> Permutation:
        image = list(range(1, n + 1))
        image[a - 1], image[b - 1] = b, a
        return cls(tuple(image))

    def __call__(self, j: int) -> int:
        return self.image[j - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return Permutation(tuple(self(other(j)) for j in range(1, self.n + 1)))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for j, p in enumerate(self.image, start=1):
            inv[p - 1] = j
        return Permutation(tuple(inv))

    def as_array(self) -> np.ndarray:
        """0-based image array, the form the kernels take."""
        return np.array(self.image, dtype=np.int64) - 1


def all_permutations(n: int) -> Iterator[Permutation]:
    """S_n in lexicographic order of the image tuple."""
    for image in _permutations(range(1, n + 1)):
        yield Permutation(image)


def to_generalized(f: MultiOutputFunction) -> GeneralizedFunction:
    weights = (np.int64(1) << np.arange(f.m, dtype=np.int64))[:, None]
    values = (f.components * weights).sum(axis=0) % (1 << f.m)
    return GeneralizedFunction(f.n, f.m, values)


def from_generalized(g: GeneralizedFunction) -> MultiOutputFunction:
    comps = (g.values[None, :] >> np.arange(g.m, dtype=np.int64)[:, None]) & 1
    return MultiOutputFunction(g.n, g.m, comps)


def generalized_anf(g: GeneralizedFunction) -> GeneralizedAnf:
    """Unique Z_{2^m} monomial expansion of g (signed Moebius transform)."""
    coeffs = kernels.mobius_mod(np.ascontiguousarray(g.values), g.modulus)
    return GeneralizedAnf(g.n, g.m, {int(s): int(c) for s, c in enumerate(coeffs) if c})


def component_combination(f: MultiOutputFunction, v: int) -> np.ndarray:
    """Truth table of v.f = XOR of the components f_i with bit i-1 of v set."""
    if not 0 < v < (1 << f.m):
        raise ValueError(f"v must be a nonzero {f.m}-bit mask, got {v}")
    return kernels.combine_components(np.ascontiguousarray(f.components), v)


def permute_variables(g: GeneralizedFunction, pi: Permutation) -> GeneralizedFunction:
    if pi.n != g.n:
        raise ValueError(f"permutation acts on {pi.n} variables, function has {g.n}")
    return GeneralizedFunction(g.n, g.m, kernels.permute_values(np.ascontiguousarray(g.values), pi.as_array()))


def is_symmetric(g: GeneralizedFunction) -> bool:
    """True iff g is invariant under every adjacent transposition (hence all of S_n)."""
    vals = np.ascontiguousarray(g.values)
    for a in range(1, g.n):
        swapped = kernels.permute_values(vals, Permutation.transposition(g.n, a, a + 1).as_array())
        if not np.array_equal(swapped, vals):
            return False
    return True


def is_symmetric_table(bits: np.ndarray, n: int) -> bool:
    return is_symmetric(GeneralizedFunction(n, 1, bits))
