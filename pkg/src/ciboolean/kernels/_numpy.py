"""Pure-numpy kernels.

Every function here has a twin with the same signature in ``_numba``.
Integer inputs are int64 arrays; outputs are fresh int64 arrays.
"""
import numpy as np


def parity_mask(mask, size):
    """Parity of ``k & mask`` for k in range(size), as 0/1 int64."""
    k = np.arange(size, dtype=np.int64)
    return (np.bitwise_count(k & mask) & 1).astype(np.int64)


def fwht(a):
    """Unnormalised Walsh-Hadamard transform (butterfly, natural order)."""
    a = np.array(a, dtype=np.int64)
    size = a.size
    h = 1
    while h < size:
        b = a.reshape(-1, 2, h)
        lo = b[:, 0, :] + b[:, 1, :]
        hi = b[:, 0, :] - b[:, 1, :]
        a = np.stack((lo, hi), axis=1).reshape(size)
        h *= 2
    return a


def mobius_mod(values, modulus):
    """Coefficients c_S = sum_{x subset S} (-1)^{|S|-|x|} f(x) mod ``modulus``."""
    a = np.array(values, dtype=np.int64)
    size = a.size
    h = 1
    while h < size:
        b = a.reshape(-1, 2, h)
        hi = (b[:, 1, :] - b[:, 0, :]) % modulus
        a = np.stack((b[:, 0, :], hi), axis=1).reshape(size)
        h *= 2
    return a % modulus


def accumulate_roots(exps, level):
    """Dense coefficients of sum_k zeta^{exps[k]} with zeta a primitive 2^level-th root."""
    half = 1 << (level - 1)
    e = exps & ((1 << level) - 1)
    neg = e >= half
    pos = e & (half - 1)
    plus = np.bincount(pos[~neg], minlength=half)
    minus = np.bincount(pos[neg], minlength=half)
    return (plus - minus).astype(np.int64)


def walsh_component_point(bits, u):
    """sum_x (-1)^{bits[x] + u.x} for a single-output 0/1 table."""
    flips = bits ^ parity_mask(u, bits.size)
    return int(bits.size - 2 * np.count_nonzero(flips))


def walsh_generalized_coeffs(values, c, i):
    """Coefficients (level i) of sum_x w_i^{values[x]} (-1)^{c.x}."""
    exps = (values & ((1 << i) - 1)) + (parity_mask(c, values.size) << (i - 1))
    return accumulate_roots(exps, i)


def dft_coeffs(values, i, j, n, level):
    """Coefficients (level ``level``) of sum_k w_i^{values[k]} xi^{-kj}, xi = zeta_{2^n}.

    Caller guarantees 2^(n - level) divides j when level < n.
    """
    k = np.arange(values.size, dtype=np.int64)
    step = (j << level) >> n
    mask = (1 << level) - 1
    exps = ((values << (level - i)) - ((k * step) & mask)) & mask
    return accumulate_roots(exps, level)


def conditional_counts(values, positions, modulus):
    """Table counts[a, alpha] = #{x : x restricted to positions == a, values[x] == alpha}.

    ``positions`` holds 0-based bit indices; bit j of the assignment index a
    is the value of input bit positions[j].
    """
    k = np.arange(values.size, dtype=np.int64)
    key = np.zeros(values.size, dtype=np.int64)
    for j in range(positions.size):
        key |= ((k >> positions[j]) & 1) << j
    rows = 1 << positions.size
    flat = np.bincount(key * modulus + values, minlength=rows * modulus)
    return flat.reshape(rows, modulus).astype(np.int64)


def permute_values(values, perm):
    """out[x] = values[z] with bit j of z equal to bit perm[j] of x (0-based)."""
    k = np.arange(values.size, dtype=np.int64)
    src = np.zeros(values.size, dtype=np.int64)
    for j in range(perm.size):
        src |= ((k >> perm[j]) & 1) << j
    return values[src]


def combine_components(components, v):
    """XOR of the rows of ``components`` selected by the bits of v."""
    out = np.zeros(components.shape[1], dtype=np.int64)
    for r in range(components.shape[0]):
        if (v >> r) & 1:
            out ^= components[r]
    return out
