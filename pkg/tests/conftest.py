import numpy as np
import pytest

import switchlist.core
import switchlist.oracle
from switchlist import _pykernels

try:
    from switchlist import _kernels
except ImportError:
    _kernels = None

BACKENDS = [pytest.param(_pykernels, id="python")]
if _kernels is not None:
    BACKENDS.append(pytest.param(_kernels, id="cython"))


@pytest.fixture(params=BACKENDS)
def backend(request, monkeypatch):
    """Route core and oracle through one specific kernel module."""
    monkeypatch.setattr(switchlist.core, "kernels", request.param)
    monkeypatch.setattr(switchlist.oracle, "kernels", request.param)
    return request.param


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.report_lines():
        terminalreporter.write_line(line)
