import os

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", deadline=None, max_examples=500)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


# acceptance outcomes: criterion number -> list of (ok, message)
_CRITERIA = {}


@pytest.fixture
def record():
    def _record(number, ok, message):
        _CRITERIA.setdefault(number, []).append((bool(ok), message))
        print(f"criterion {number}: {'PASS' if ok else 'FAIL'} {message}")
        return ok
    return _record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        parts = _CRITERIA[number]
        ok = all(p[0] for p in parts)
        text = "; ".join(m if p else f"[failed] {m}" for p, m in parts)
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {text}")
