import numpy as np
import pytest

ACCEPTANCE_LINES = []


def haar_pairs(count, seed):
    rng = np.random.default_rng(seed)
    z = rng.standard_normal((count, 2)) + 1j * rng.standard_normal((count, 2))
    z /= np.linalg.norm(z, axis=1, keepdims=True)
    return [(complex(a), complex(b)) for a, b in z]


@pytest.fixture(scope="session")
def random_inputs():
    return haar_pairs(100, 20261019)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
