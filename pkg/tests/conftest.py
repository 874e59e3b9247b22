import numpy as np
import pytest

from skewcorr.states import bell_state, example_state, max_mixed, product_mixed, random_state

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def bell():
    return bell_state()


@pytest.fixture
def example():
    return example_state()


@pytest.fixture
def product_mix():
    return product_mixed()


@pytest.fixture
def maxmix():
    return max_mixed()


@pytest.fixture(params=[(2, 2), (2, 3), (2, 4)], ids=lambda d: f"{d[0]}x{d[1]}")
def dims(request):
    return request.param


@pytest.fixture
def random_states(dims):
    return [random_state(*dims, seed) for seed in range(8)]


def ket(*amps):
    v = np.array(amps, dtype=complex)
    return v / np.linalg.norm(v)


def proj(v):
    return np.outer(v, v.conj())
