import numpy as np
import pytest
from hypothesis import strategies as st

from dircorr import kernels
from dircorr.gaussian_core import CovarianceMatrix, StsParams, sts_covariance

# filled by test_acceptance.py, printed after the run
ACCEPTANCE_LINES = {}

VACUUM = CovarianceMatrix(1.0, 1.0, 0.0, 0.0)

squeezing = st.floats(min_value=0.0, max_value=2.0, allow_nan=False)
noise = st.floats(min_value=0.0, max_value=3.0, allow_nan=False)
sts_params = st.builds(StsParams, squeezing, noise, noise)


@pytest.fixture(params=kernels.available_backends())
def backend(request):
    return request.param


@pytest.fixture
def one_way_state():
    """r = 0.6, nA = 0, nB = 1: Bob steers Alice but not vice versa."""
    return sts_covariance(StsParams(0.6, 0.0, 1.0))


@pytest.fixture
def tmsv():
    return sts_covariance(StsParams(0.6, 0.0, 0.0))


def random_sts(size, seed, r_max=2.0, noise_max=3.0):
    rng = np.random.default_rng(seed)
    return (
        rng.uniform(0.0, r_max, size),
        rng.uniform(0.0, noise_max, size),
        rng.uniform(0.0, noise_max, size),
    )


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
