"""Brute-force reference implementations.

Plain Python loops over explicit input tuples; nothing here touches the
package kernels, so these stay independent of the code they check.
"""
import cmath
import itertools
from fractions import Fraction


def inputs(n):
    """All x = (x_1, ..., x_n) in index order (x_1 is the low bit of k)."""
    return [tuple((k >> b) & 1 for b in range(n)) for k in range(1 << n)]


def index_of(x):
    return sum(b << j for j, b in enumerate(x))


def dot(a, b):
    return sum(p & q for p, q in zip(a, b)) & 1


def mask_bits(mask, n):
    return tuple((mask >> b) & 1 for b in range(n))


def generalized_values(components, m):
    size = len(components[0])
    return [sum(components[i][k] << i for i in range(m)) % (1 << m) for k in range(size)]


def walsh_sum(bits, n, u):
    ub = mask_bits(u, n)
    return sum((-1) ** (bits[index_of(x)] ^ dot(ub, x)) for x in inputs(n))


def combination(components, v):
    out = [0] * len(components[0])
    for i, row in enumerate(components):
        if (v >> i) & 1:
            out = [a ^ b for a, b in zip(out, row)]
    return out


def complex_generalized_walsh(values, n, c, i):
    w = cmath.exp(2j * cmath.pi / (1 << i))
    cb = mask_bits(c, n)
    return sum(w ** values[index_of(x)] * (-1) ** dot(cb, x) for x in inputs(n))


def complex_dft(values, n, i, j):
    w = cmath.exp(2j * cmath.pi / (1 << i))
    xi = cmath.exp(2j * cmath.pi / (1 << n))
    return sum(w ** values[k] * xi ** (-k * j) for k in range(1 << n))


def complex_value(level, coeffs):
    z = cmath.exp(2j * cmath.pi / (1 << level))
    return sum(c * z ** j for j, c in enumerate(coeffs))


def is_ci_by_definition(values, n, t):
    """Fix every subset of at most t coordinates; compare exact probabilities."""
    size = 1 << n
    full = {}
    for v in values:
        full[v] = full.get(v, 0) + 1
    full_p = {a: Fraction(c, size) for a, c in full.items()}
    xs = inputs(n)
    for s in range(1, t + 1):
        for subset in itertools.combinations(range(n), s):
            for assignment in itertools.product((0, 1), repeat=s):
                rows = [values[index_of(x)] for x in xs if all(x[p] == a for p, a in zip(subset, assignment))]
                cond = {}
                for v in rows:
                    cond[v] = cond.get(v, 0) + 1
                keys = set(cond) | set(full_p)
                if any(Fraction(cond.get(a, 0), len(rows)) != full_p.get(a, 0) for a in keys):
                    return False
    return True


def ci_order_by_definition(values, n):
    t = 0
    while t < n and is_ci_by_definition(values, n, t + 1):
        t += 1
    return t


def permuted_values(values, n, image):
    """(pi . g)(x) = g(x_pi(1), ..., x_pi(n)) with image[j-1] = pi(j)."""
    out = []
    for x in inputs(n):
        z = tuple(x[image[j] - 1] for j in range(n))
        out.append(values[index_of(z)])
    return out


def anf_evaluate(coeffs, n, m):
    """Evaluate {monomial mask: coefficient} at every x, mod 2^m."""
    out = []
    for k in range(1 << n):
        out.append(sum(c for mono, c in coeffs.items() if k & mono == mono) % (1 << m))
    return out
