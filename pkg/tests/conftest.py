import numpy as np
import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

SIGNAL_IDS = ["f1", "f2", "f3"]


@pytest.fixture
def cos_samples():
    from lassotrig import sample_function

    return sample_function(np.cos, 5)


def brute_eval(coeffs, x):
    """Evaluate by an explicit basis matrix, independent of the library path."""
    x = np.asarray(x, dtype=float)
    N, n = coeffs.node_count, coeffs.node_count // 2
    total = np.full(x.shape, coeffs.a[0] / np.sqrt(2 * np.pi))
    for ell in range(1, n + 1):
        scale = np.sqrt(2 * np.pi) if (N % 2 == 0 and ell == n) else np.sqrt(np.pi)
        total += coeffs.a[ell] * np.cos(ell * x) / scale
    for ell, b in enumerate(coeffs.b, start=1):
        total += b * np.sin(ell * x) / np.sqrt(np.pi)
    return total


ACCEPTANCE_REPORT: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_REPORT:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_REPORT:
            terminalreporter.write_line(line)
