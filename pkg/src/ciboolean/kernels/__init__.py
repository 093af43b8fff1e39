"""Hot numeric kernels with a numba path and a pure-numpy fallback.

The backend is picked once, at import time:

* ``CIBOOLEAN_DISABLE_NUMBA=1`` forces the numpy kernels;
* otherwise the numba kernels are used when numba imports cleanly.

Both backends stay importable (``numpy_backend`` / ``numba_backend``) so the
benchmark and the tests can run them side by side.
"""
import os

from . import _numpy as numpy_backend

try:
    from . import _numba as numba_backend
except ImportError:  # pragma: no cover - numba is a hard dependency in CI
    numba_backend = None

_disabled = os.environ.get("CIBOOLEAN_DISABLE_NUMBA", "").strip().lower() not in ("", "0", "false", "no")

if numba_backend is not None and not _disabled:
    backend = numba_backend
    BACKEND_NAME = "numba"
else:
    backend = numpy_backend
    BACKEND_NAME = "numpy"

KERNEL_NAMES = (
    "parity_mask",
    "fwht",
    "mobius_mod",
    "accumulate_roots",
    "walsh_component_point",
    "walsh_generalized_coeffs",
    "dft_coeffs",
    "conditional_counts",
    "permute_values",
    "combine_components",
)

parity_mask = backend.parity_mask
fwht = backend.fwht
mobius_mod = backend.mobius_mod
accumulate_roots = backend.accumulate_roots
walsh_component_point = backend.walsh_component_point
walsh_generalized_coeffs = backend.walsh_generalized_coeffs
dft_coeffs = backend.dft_coeffs
conditional_counts = backend.conditional_counts
permute_values = backend.permute_values
combine_components = backend.combine_components
