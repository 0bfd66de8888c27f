import contextlib

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

_ACCEPTANCE = []


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


@pytest.fixture
def criterion():
    """Record a PASS/FAIL line for an acceptance criterion; failures still raise."""

    @contextlib.contextmanager
    def _check(label):
        try:
            yield
        except BaseException as exc:
            _ACCEPTANCE.append(f"[FAIL] {label}: {type(exc).__name__}: {str(exc).splitlines()[0] if str(exc) else ''}")
            raise
        _ACCEPTANCE.append(f"[PASS] {label}")

    return _check


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
