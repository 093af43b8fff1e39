import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(__file__))

from ciboolean import GeneralizedFunction, MultiOutputFunction  # noqa: E402

# Worked example f_g column, keyed by explicit (x_1, x_2, x_3) rather than row position.
EXAMPLE_FG = {
    (0, 0, 0): 0,
    (1, 0, 0): 0,
    (0, 1, 0): 1,
    (1, 1, 0): 3,
    (0, 0, 1): 1,
    (1, 0, 1): 1,
    (0, 1, 1): 0,
    (1, 1, 1): 2,
}


@pytest.fixture
def example_f():
    # f_g = f_1 + 2 f_2 reproduces the f_g column with f_1 = x2 ^ x3, f_2 = x1 x2.
    return MultiOutputFunction.from_callable(3, 2, lambda x: (x[1] ^ x[2], x[0] & x[1]))


@pytest.fixture
def example_g():
    vals = [0] * 8
    for x, v in EXAMPLE_FG.items():
        vals[x[0] | x[1] << 1 | x[2] << 2] = v
    return GeneralizedFunction(3, 2, vals)


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


_ACCEPTANCE = pytest.StashKey[dict]()


@pytest.fixture
def record_criterion(request):
    """Store one acceptance line per criterion for the terminal summary."""
    store = request.config.stash.setdefault(_ACCEPTANCE, {})

    def record(number, passed, detail):
        line = f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}"
        store[number] = line
        print(line)
        return passed

    return record


def pytest_terminal_summary(terminalreporter, config):
    store = config.stash.get(_ACCEPTANCE, {})
    if store:
        terminalreporter.section("acceptance criteria")
        for number in sorted(store):
            terminalreporter.write_line(store[number])
