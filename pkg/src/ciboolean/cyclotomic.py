"""Exact arithmetic in Z[zeta_{2^L}] = Z[z] / (z^(2^(L-1)) + 1).

An element is stored densely as 2^(L-1) Python integers; coefficient j
multiplies zeta^j.  Binary operations on elements of different levels lift
the lower one first, since Z[zeta_{2^L}] embeds in Z[zeta_{2^L'}] for L <= L'.
"""
from __future__ import annotations

from typing import Iterable, Union


class CycloInt:
    __slots__ = ("level", "coeffs")

    def __init__(self, level: int, coeffs: Iterable[int]):
        if level < 1:
            raise ValueError(f"level must be >= 1, got {level}")
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != 1 << (level - 1):
            raise ValueError(f"level {level} needs {1 << (level - 1)} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("CycloInt is immutable")

    @classmethod
    def from_int(cls, value: int, level: int = 1) -> CycloInt:
        return cls(level, (value,) + (0,) * ((1 << (level - 1)) - 1))

    @classmethod
    def zero(cls, level: int = 1) -> CycloInt:
        return cls.from_int(0, level)

    @property
    def half(self) -> int:
        return 1 << (self.level - 1)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_integer(self) -> bool:
        return not any(self.coeffs[1:])

    def lift(self, level: int) -> CycloInt:
        """Image under zeta_{2^L} -> zeta_{2^level}^(2^(level - L))."""
        if level < self.level:
            raise ValueError(f"cannot lift level {self.level} down to {level}")
        if level == self.level:
            return self
        stride = 1 << (level - self.level)
        out = [0] * (1 << (level - 1))
        for j, c in enumerate(self.coeffs):
            out[j * stride] = c
        return CycloInt(level, out)

    def conj(self) -> CycloInt:
        """The automorphism zeta -> zeta^-1 (complex conjugation)."""
        half = self.half
        out = [0] * half
        out[0] = self.coeffs[0]
        for j in range(1, half):
            # zeta^-j = -zeta^(half - j)
            out[half - j] = -self.coeffs[j]
        return CycloInt(self.level, out)

    def _coerce(self, other) -> tuple[CycloInt, CycloInt] | None:
        if isinstance(other, int):
            other = CycloInt.from_int(other, self.level)
        elif not isinstance(other, CycloInt):
            return None
        level = max(self.level, other.level)
        return self.lift(level), other.lift(level)

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycloInt(a.level, (x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloInt(self.level, (-c for c in self.coeffs))

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycloInt(a.level, (x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        half = a.half
        out = [0] * half
        bnz = [(k, y) for k, y in enumerate(b.coeffs) if y]
        for j, x in enumerate(a.coeffs):
            if not x:
                continue
            for k, y in bnz:
                e = j + k
                if e < half:
                    out[e] += x * y
                else:
                    out[e - half] -= x * y
        return CycloInt(a.level, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a.coeffs == b.coeffs

    def __hash__(self):
        # Hash the lowest level representing the same element so lift-equal values collide.
        coeffs, level = self.coeffs, self.level
        while level > 1 and not any(coeffs[1::2]):
            coeffs, level = coeffs[::2], level - 1
        return hash((level, coeffs))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"CycloInt(level={self.level}, coeffs={self.coeffs})"

    def __str__(self):
        return render(self)


Scalar = Union[int, CycloInt]


def root_power(level: int, e: int) -> CycloInt:
    """zeta_{2^level}^e in canonical form."""
    if level < 1:
        raise ValueError(f"level must be >= 1, got {level}")
    half = 1 << (level - 1)
    e %= 1 << level
    out = [0] * half
    if e < half:
        out[e] = 1
    else:
        out[e - half] = -1
    return CycloInt(level, out)


def render(a: CycloInt) -> str:
    """Polynomial in zeta_{2^L}, e.g. ``2 + 2·ζ4`` or ``1 - ζ8^3``."""
    name = f"ζ{1 << a.level}"
    parts: list[tuple[int, str]] = []
    for j, c in enumerate(a.coeffs):
        if not c:
            continue
        if j == 0:
            parts.append((c, str(abs(c))))
            continue
        base = name if j == 1 else f"{name}^{j}"
        parts.append((c, base if abs(c) == 1 else f"{abs(c)}·{base}"))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] < 0 else "") + parts[0][1]
    for c, text in parts[1:]:
        out += (" - " if c < 0 else " + ") + text
    return out


def common_level(*values: CycloInt) -> tuple[CycloInt, ...]:
    level = max(v.level for v in values)
    return tuple(v.lift(level) for v in values)
