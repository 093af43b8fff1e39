"""Truth-table and ANF text formats.

Truth-table file::

    # optional comment lines
    n m
    v_0 v_1 ... v_{2^n - 1}

Values are decimal, whitespace separated (any line breaks), in index order
with x_1 as the low bit.  ANF expressions are ``+``-separated terms, each a
coefficient, a ``*``-product of variables ``x1..xn``, or ``c*x..``;
arithmetic is mod 2^m.
"""
from __future__ import annotations

import hashlib
import re

import numpy as np

from .bfcore import GeneralizedAnf, GeneralizedFunction, MAX_M, MAX_N


class InputError(ValueError):
    """Malformed truth table or ANF expression."""


def parse_truth_table(text: str) -> GeneralizedFunction:
    header = None
    values: list[int] = []
    where: list[tuple[int, int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        if header is None:
            if len(tokens) != 2:
                raise InputError(f"line {lineno}: header must be 'n m', got {stripped!r}")
            try:
                header = (int(tokens[0]), int(tokens[1]))
            except ValueError:
                raise InputError(f"line {lineno}: header must be two integers, got {stripped!r}") from None
            continue
        for col, tok in enumerate(tokens, start=1):
            try:
                values.append(int(tok, 10))
            except ValueError:
                raise InputError(f"line {lineno}, value {col}: not a decimal integer: {tok!r}") from None
            where.append((lineno, col))
    if header is None:
        raise InputError("missing 'n m' header")
    n, m = header
    if not 1 <= n <= MAX_N or not 1 <= m <= MAX_M:
        raise InputError(f"header out of range: n={n} (1..{MAX_N}), m={m} (1..{MAX_M})")
    if len(values) != 1 << n:
        raise InputError(f"expected {1 << n} values, got {len(values)}")
    for k, value in enumerate(values):
        if not 0 <= value < (1 << m):
            lineno, col = where[k]
            raise InputError(f"line {lineno}, value {col} (index {k}): {value} not in [0, {(1 << m) - 1}]")
    return GeneralizedFunction(n, m, np.array(values, dtype=np.int64))


def render_truth_table(g: GeneralizedFunction, per_line: int = 16) -> str:
    lines = [f"{g.n} {g.m}"]
    vals = [str(int(v)) for v in g.values]
    for start in range(0, len(vals), per_line):
        lines.append(" ".join(vals[start:start + per_line]))
    return "\n".join(lines) + "\n"


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|x(?P<var>\d+)|(?P<op>[+*]))")


def _tokenize(text: str):
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            raise InputError(f"syntax error at position {pos}: {text[pos:pos + 10]!r}")
        pos = match.end()
        if match.group("num") is not None:
            yield "num", int(match.group("num")), match.start("num")
        elif match.group("var") is not None:
            yield "var", int(match.group("var")), match.start("var")
        else:
            yield "op", match.group("op"), match.start("op")


def parse_anf_terms(text: str, n: int, m: int) -> GeneralizedAnf:
    """Parse into monomial coefficients (mod 2^m); like monomials are summed."""
    if not 1 <= n <= MAX_N or not 1 <= m <= MAX_M:
        raise InputError(f"n={n}, m={m} out of range")
    modulus = 1 << m
    coeffs: dict[int, int] = {}
    coef, mono, expect_factor = 1, 0, True
    saw_factor = False

    def flush(pos):
        nonlocal coef, mono, saw_factor
        if not saw_factor:
            raise InputError(f"empty term at position {pos}")
        coeffs[mono] = (coeffs.get(mono, 0) + coef) % modulus
        coef, mono, saw_factor = 1, 0, False

    last = 0
    for kind, val, pos in _tokenize(text):
        last = pos
        if expect_factor:
            if kind == "num":
                coef = coef * val % modulus
            elif kind == "var":
                if not 1 <= val <= n:
                    raise InputError(f"unknown variable x{val} at position {pos} (n={n})")
                mono |= 1 << (val - 1)
            else:
                raise InputError(f"unexpected {val!r} at position {pos}")
            saw_factor = True
            expect_factor = False
        else:
            if kind != "op":
                raise InputError(f"missing operator before position {pos}")
            if val == "+":
                flush(pos)
            expect_factor = True
    if expect_factor:
        raise InputError(f"expression ends with an operator or is empty (position {last})")
    flush(last)
    return GeneralizedAnf(n, m, {k: c for k, c in coeffs.items() if c})


def parse_anf(text: str, n: int, m: int) -> GeneralizedFunction:
    return parse_anf_terms(text, n, m).evaluate()


def content_digest(g: GeneralizedFunction) -> str:
    h = hashlib.sha256()
    h.update(f"{g.n} {g.m}\n".encode())
    h.update(np.ascontiguousarray(g.values, dtype="<i8").tobytes())
    return h.hexdigest()
