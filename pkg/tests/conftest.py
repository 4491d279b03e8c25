import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from krigmean.ingest import TimeSeries  # noqa: E402
from krigmean.kernels import available_backends, load_backend  # noqa: E402


@pytest.fixture(params=available_backends())
def backend(request):
    return load_backend(request.param)


@pytest.fixture
def rng():
    return np.random.default_rng(20120501)


@pytest.fixture
def small_ts():
    return TimeSeries((1.0, 2.0, 4.0))


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_bytes(text.encode("utf-8"))
        return p

    return _write


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
