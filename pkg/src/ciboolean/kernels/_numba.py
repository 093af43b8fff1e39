"""numba-compiled kernels, loop-for-loop twins of ``_numpy``."""
import numba
import numpy as np

JIT_OPTIONS = {"nogil": True, "cache": True}


@numba.njit(**JIT_OPTIONS)
def _popparity(x):
    # x is a nonnegative mask below 2^32
    x ^= x >> 16
    x ^= x >> 8
    x ^= x >> 4
    x ^= x >> 2
    x ^= x >> 1
    return x & 1


@numba.njit(**JIT_OPTIONS)
def parity_mask(mask, size):
    out = np.empty(size, dtype=np.int64)
    for k in range(size):
        out[k] = _popparity(k & mask)
    return out


@numba.njit(**JIT_OPTIONS)
def fwht(a):
    a = a.astype(np.int64)
    size = a.size
    h = 1
    while h < size:
        for start in range(0, size, 2 * h):
            for k in range(start, start + h):
                x = a[k]
                y = a[k + h]
                a[k] = x + y
                a[k + h] = x - y
        h *= 2
    return a


@numba.njit(**JIT_OPTIONS)
def mobius_mod(values, modulus):
    a = values.astype(np.int64)
    size = a.size
    h = 1
    while h < size:
        for start in range(0, size, 2 * h):
            for k in range(start, start + h):
                a[k + h] = (a[k + h] - a[k]) % modulus
        h *= 2
    for k in range(size):
        a[k] %= modulus
    return a


@numba.njit(**JIT_OPTIONS)
def accumulate_roots(exps, level):
    half = 1 << (level - 1)
    mask = (1 << level) - 1
    out = np.zeros(half, dtype=np.int64)
    for k in range(exps.size):
        e = exps[k] & mask
        if e < half:
            out[e] += 1
        else:
            out[e - half] -= 1
    return out


@numba.njit(**JIT_OPTIONS)
def walsh_component_point(bits, u):
    total = 0
    for x in range(bits.size):
        total += 1 - 2 * ((bits[x] ^ _popparity(x & u)) & 1)
    return total


@numba.njit(**JIT_OPTIONS)
def walsh_generalized_coeffs(values, c, i):
    size = 1 << i
    half = size >> 1
    mask = size - 1
    shift = i - 1
    counts = np.zeros(size, dtype=np.int64)
    for x in range(values.size):
        counts[(values[x] + (_popparity(x & c) << shift)) & mask] += 1
    out = np.empty(half, dtype=np.int64)
    for j in range(half):
        out[j] = counts[j] - counts[j + half]
    return out


@numba.njit(**JIT_OPTIONS)
def dft_coeffs(values, i, j, n, level):
    half = 1 << (level - 1)
    mask = (1 << level) - 1
    step = (j << level) >> n
    shift = level - i
    out = np.zeros(half, dtype=np.int64)
    for k in range(values.size):
        e = ((values[k] << shift) - ((k * step) & mask)) & mask
        if e < half:
            out[e] += 1
        else:
            out[e - half] -= 1
    return out


@numba.njit(**JIT_OPTIONS)
def conditional_counts(values, positions, modulus):
    rows = 1 << positions.size
    out = np.zeros((rows, modulus), dtype=np.int64)
    for k in range(values.size):
        key = 0
        for j in range(positions.size):
            key |= ((k >> positions[j]) & 1) << j
        out[key, values[k]] += 1
    return out


@numba.njit(**JIT_OPTIONS)
def permute_values(values, perm):
    out = np.empty_like(values)
    for k in range(values.size):
        src = 0
        for j in range(perm.size):
            src |= ((k >> perm[j]) & 1) << j
        out[k] = values[src]
    return out


@numba.njit(**JIT_OPTIONS)
def combine_components(components, v):
    size = components.shape[1]
    out = np.zeros(size, dtype=np.int64)
    for r in range(components.shape[0]):
        if (v >> r) & 1:
            for k in range(size):
                out[k] ^= components[r, k]
    return out
