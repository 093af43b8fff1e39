"""Both kernel backends against each other and against plain-Python oracles."""
import numpy as np
import pytest

import oracles
from ciboolean import kernels

BACKENDS = [kernels.numpy_backend]
if kernels.numba_backend is not None:
    BACKENDS.append(kernels.numba_backend)


@pytest.fixture(params=BACKENDS, ids=lambda b: b.__name__.rsplit("_", 1)[-1])
def backend(request):
    return request.param


def test_backend_selection_flag():
    import os
    import subprocess
    import sys

    code = "from ciboolean import kernels; print(kernels.BACKEND_NAME)"
    env = dict(os.environ, CIBOOLEAN_DISABLE_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "numpy"
    env["CIBOOLEAN_DISABLE_NUMBA"] = "0"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == ("numba" if kernels.numba_backend is not None else "numpy")


def test_parity_mask(backend):
    for mask in (0, 1, 5, 0b1011):
        expected = [bin(k & mask).count("1") & 1 for k in range(16)]
        assert backend.parity_mask(mask, 16).tolist() == expected


def test_fwht_matches_direct_sum(backend, rng):
    n = 6
    bits = rng.integers(0, 2, size=1 << n)
    spectrum = backend.fwht((1 - 2 * bits).astype(np.int64))
    assert spectrum.tolist() == [oracles.walsh_sum(bits.tolist(), n, u) for u in range(1 << n)]


def test_mobius_mod(backend, rng):
    vals = rng.integers(0, 8, size=32)
    coeffs = backend.mobius_mod(vals.astype(np.int64), 8)
    mapping = {s: int(c) for s, c in enumerate(coeffs) if c}
    assert oracles.anf_evaluate(mapping, 5, 3) == vals.tolist()


def test_accumulate_roots(backend):
    exps = np.array([0, 1, 2, 3, 4, 5, 6, 7, -1], dtype=np.int64)
    # sum of all 8th roots is 0, plus zeta^-1 = -zeta^3
    assert backend.accumulate_roots(exps, 3).tolist() == [0, 0, 0, -1]


def test_walsh_points(backend, rng):
    n = 5
    bits = rng.integers(0, 2, size=1 << n).astype(np.int64)
    for u in range(1 << n):
        assert backend.walsh_component_point(bits, u) == oracles.walsh_sum(bits.tolist(), n, u)


def test_generalized_walsh_coeffs(backend, rng):
    n, m = 4, 3
    vals = rng.integers(0, 1 << m, size=1 << n).astype(np.int64)
    for i in range(1, m + 1):
        for c in range(1 << n):
            coeffs = backend.walsh_generalized_coeffs(vals, c, i)
            z = oracles.complex_generalized_walsh(vals.tolist(), n, c, i)
            assert abs(oracles.complex_value(i, coeffs.tolist()) - z) < 1e-9


def test_dft_coeffs(backend, rng):
    n, m = 4, 3
    vals = rng.integers(0, 1 << m, size=1 << n).astype(np.int64)
    for i in range(1, m + 1):
        for j in range(1 << n):
            level = max(i, n) if j else i
            coeffs = backend.dft_coeffs(vals, i, j, n, level)
            z = oracles.complex_dft(vals.tolist(), n, i, j)
            assert abs(oracles.complex_value(level, coeffs.tolist()) - z) < 1e-9


def test_conditional_counts(backend, rng):
    n, modulus = 5, 4
    vals = rng.integers(0, modulus, size=1 << n).astype(np.int64)
    positions = np.array([3, 0], dtype=np.int64)
    table = backend.conditional_counts(vals, positions, modulus)
    for a3 in (0, 1):
        for a0 in (0, 1):
            rows = [vals[k] for k in range(1 << n) if (k >> 3) & 1 == a3 and k & 1 == a0]
            expected = [rows.count(a) for a in range(modulus)]
            assert table[a3 | (a0 << 1)].tolist() == expected


def test_permute_and_combine(backend, rng):
    vals = rng.integers(0, 4, size=16).astype(np.int64)
    image = (2, 4, 1, 3)
    perm = np.array(image, dtype=np.int64) - 1
    assert backend.permute_values(vals, perm).tolist() == oracles.permuted_values(vals.tolist(), 4, image)
    comps = rng.integers(0, 2, size=(3, 16)).astype(np.int64)
    for v in range(1, 8):
        assert backend.combine_components(comps, v).tolist() == oracles.combination(comps.tolist(), v)


@pytest.mark.skipif(kernels.numba_backend is None, reason="numba not installed")
@pytest.mark.parametrize("name", kernels.KERNEL_NAMES)
def test_backends_agree_on_random_inputs(name, rng):
    nb, np_ = kernels.numba_backend, kernels.numpy_backend
    n, m = 7, 4
    vals = rng.integers(0, 1 << m, size=1 << n).astype(np.int64)
    bits = vals & 1
    cases = {
        "parity_mask": [(37, 1 << n)],
        "fwht": [(1 - 2 * bits,)],
        "mobius_mod": [(vals, 1 << m)],
        "accumulate_roots": [(rng.integers(-50, 50, size=200).astype(np.int64), 5)],
        "walsh_component_point": [(bits, u) for u in (0, 3, 77)],
        "walsh_generalized_coeffs": [(vals, c, i) for c in (0, 5, 100) for i in range(1, m + 1)],
        "dft_coeffs": [(vals, i, j, n, max(i, n - ((j & -j).bit_length() - 1)))
                       for i in range(1, m + 1) for j in (1, 2, 16, 64, 96)],
        "conditional_counts": [(vals, np.array([6, 2, 0], dtype=np.int64), 1 << m)],
        "permute_values": [(vals, np.array([3, 0, 6, 1, 5, 2, 4], dtype=np.int64))],
        "combine_components": [(rng.integers(0, 2, size=(4, 1 << n)).astype(np.int64), 11)],
    }
    for args in cases[name]:
        a = getattr(nb, name)(*args)
        b = getattr(np_, name)(*args)
        assert np.array_equal(np.asarray(a), np.asarray(b)), (name, args[1:])
