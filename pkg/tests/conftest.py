import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from monometric.hermitian import DensityMatrix, TangentVector

settings.register_profile(
    "monometric",
    derandomize=True,
    deadline=None,
    max_examples=50,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("monometric")

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)


@pytest.fixture
def quarter_density() -> DensityMatrix:
    """``Diag(3/4, 1/4)``"""
    return DensityMatrix(np.diag([0.75, 0.25]))


@pytest.fixture
def maximally_mixed() -> DensityMatrix:
    return DensityMatrix(np.eye(2) / 2)


@pytest.fixture
def half_z() -> TangentVector:
    """``Diag(1/2, -1/2)``"""
    return TangentVector(np.diag([0.5, -0.5]))


@pytest.fixture
def sigma_x() -> np.ndarray:
    return SIGMA_X.copy()
