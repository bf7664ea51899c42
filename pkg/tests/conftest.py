import zlib

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from sctransforms import kernels

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture(params=kernels.available_backends())
def backend(request):
    previous = kernels.backend_name()
    kernels.set_backend(request.param)
    yield kernels.get_backend()
    kernels.set_backend(previous)


@pytest.fixture
def rng(request):
    # stable per-test stream, independent of PYTHONHASHSEED
    return np.random.default_rng(zlib.crc32(request.node.name.encode()))


ACCEPTANCE_LINES = []


class CriterionRecorder:
    label = None
    detail = ""

    def __call__(self, label):
        self.label = label
        return self


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line for an acceptance criterion."""
    return CriterionRecorder()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    rec = item.funcargs.get("criterion") if hasattr(item, "funcargs") else None
    if rec is None or rec.label is None or report.when != "call":
        return
    status = "PASS" if report.passed else "FAIL"
    line = f"{status}  {rec.label}"
    if rec.detail:
        line += f"  ({rec.detail})"
    ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
