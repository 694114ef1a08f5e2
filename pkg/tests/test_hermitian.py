import json

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from monometric.errors import (
    DimensionMismatchError,
    MatrixFormatError,
    NotHermitianError,
    NotStrictlyPositiveError,
    NotUnitaryError,
    TraceMismatchError,
)
from monometric.hermitian import (
    DensityMatrix,
    HermitianMatrix,
    TangentVector,
    dump_matrix,
    load_matrix,
    matrix_from_json,
    matrix_function,
    random_density,
    random_tangent,
    random_unitary,
    require_unitary,
    spectral_decompose,
    to_eigenbasis,
    validate_density,
)

seeds = st.integers(min_value=0, max_value=2**32 - 1)
dims = st.integers(min_value=2, max_value=5)


def test_spectral_decompose_identity():
    decomposition = spectral_decompose(np.eye(2))
    np.testing.assert_allclose(decomposition.eigenvalues, [1.0, 1.0])
    np.testing.assert_allclose(decomposition.reconstruct(), np.eye(2), atol=1e-14)


def test_spectral_decompose_diagonal():
    decomposition = spectral_decompose(np.diag([0.75, 0.25]))
    np.testing.assert_allclose(decomposition.eigenvalues, [0.75, 0.25])
    np.testing.assert_allclose(np.abs(decomposition.unitary), np.eye(2), atol=1e-14)


def test_spectral_decompose_pauli_x(sigma_x):
    decomposition = spectral_decompose(sigma_x)
    np.testing.assert_allclose(decomposition.eigenvalues, [1.0, -1.0], atol=1e-14)
    first, second = decomposition.unitary[:, 0], decomposition.unitary[:, 1]
    assert abs(np.vdot(first, [1, 1])) / np.sqrt(2) == pytest.approx(1.0)
    assert abs(np.vdot(second, [1, -1])) / np.sqrt(2) == pytest.approx(1.0)


def test_hermitian_rejects_asymmetric():
    with pytest.raises(NotHermitianError):
        HermitianMatrix([[1, 2], [0, 1]])


def test_hermitian_rejects_non_square():
    with pytest.raises(DimensionMismatchError):
        HermitianMatrix(np.ones((2, 3)))


def test_density_accepts_maximally_mixed(maximally_mixed):
    np.testing.assert_allclose(maximally_mixed.eigenvalues, [0.5, 0.5])


def test_density_rejects_pure_state():
    with pytest.raises(NotStrictlyPositiveError):
        validate_density(np.diag([1.0, 0.0]), floor=1e-12)


def test_density_rejects_wrong_trace(sigma_x):
    with pytest.raises(TraceMismatchError):
        validate_density(1.1 * (np.eye(2) + sigma_x / 2) / 2)


def test_tangent_must_be_traceless():
    with pytest.raises(TraceMismatchError):
        TangentVector(np.diag([1.0, 0.0]))


@given(n=dims, seed=seeds)
def test_random_density_is_deterministic(n, seed):
    first = random_density(n, seed)
    second = random_density(n, seed)
    np.testing.assert_array_equal(first.entries, second.entries)
    assert first.trace() == pytest.approx(1.0, abs=1e-12)
    assert first.eigenvalues[-1] >= 1e-9


@given(seed=seeds)
def test_random_density_respects_large_floor(seed):
    density = random_density(4, seed, floor=1e-3)
    assert spectral_decompose(density).eigenvalues[-1] >= 1e-3 * (1 - 1e-9)


@given(n=dims, seed=seeds)
def test_random_tangent(n, seed):
    tangent = random_tangent(n, seed)
    assert abs(np.trace(tangent.entries)) <= 1e-13 * max(1.0, tangent.frobenius_norm())
    np.testing.assert_array_equal(tangent.entries, tangent.entries.conj().T)
    np.testing.assert_array_equal(tangent.entries, random_tangent(n, seed).entries)


@given(n=dims, seed=seeds)
def test_eigenbasis_preserves_frobenius_norm(n, seed):
    density = random_density(n, [seed, 0])
    tangent = random_tangent(n, [seed, 1])
    transformed = to_eigenbasis(density, tangent)
    assert np.linalg.norm(transformed) == pytest.approx(tangent.frobenius_norm(), rel=1e-12)


def test_eigenbasis_of_commuting_tangent():
    u = random_unitary(3, 5)
    density = DensityMatrix(u @ np.diag([0.5, 0.3, 0.2]) @ u.conj().T)
    tangent = u @ np.diag([0.2, -0.5, 0.3]) @ u.conj().T
    np.testing.assert_allclose(to_eigenbasis(density, tangent), np.diag([0.2, -0.5, 0.3]), atol=1e-12)


def test_eigenbasis_dimension_mismatch(quarter_density):
    with pytest.raises(DimensionMismatchError):
        to_eigenbasis(quarter_density, np.eye(3))


def test_matrix_function_square_root(quarter_density):
    root = matrix_function(quarter_density, np.sqrt)
    np.testing.assert_allclose(root @ root, quarter_density.entries, atol=1e-13)


def test_density_power_and_inverse():
    density = random_density(3, 11, floor=1e-2)
    np.testing.assert_allclose(density.inverse() @ density.entries, np.eye(3), atol=1e-10)
    np.testing.assert_allclose(density.power(0.5) @ density.power(0.5), density.entries, atol=1e-12)


@given(n=dims, seed=seeds)
def test_random_unitary(n, seed):
    u = random_unitary(n, seed)
    np.testing.assert_allclose(u.conj().T @ u, np.eye(n), atol=1e-12)
    require_unitary(u)


def test_require_unitary_rejects():
    with pytest.raises(NotUnitaryError):
        require_unitary(2 * np.eye(2))
    with pytest.raises(NotUnitaryError):
        require_unitary(np.ones((2, 3)))


def test_matrix_json_round_trip(tmp_path):
    matrix = np.array([[0.5, 0.1 - 0.2j], [0.1 + 0.2j, 0.5]])
    path = tmp_path / "density.json"
    text = dump_matrix(matrix, path)
    assert json.loads(text) == json.loads(path.read_text())
    np.testing.assert_array_equal(load_matrix(path), matrix)


def test_matrix_json_without_imaginary_part():
    matrix = matrix_from_json({"n": 2, "re": [[0.75, 0], [0, 0.25]]})
    np.testing.assert_array_equal(matrix, np.diag([0.75, 0.25]))


@pytest.mark.parametrize(
    "document",
    [
        [[1, 0], [0, 1]],
        {"re": [[1]]},
        {"n": 0, "re": []},
        {"n": 2},
        {"n": 2, "re": [[1, 0]]},
        {"n": 2, "re": [[1, "x"], [0, 1]]},
        {"n": True, "re": [[1]]},
    ],
)
def test_matrix_json_rejects(document):
    with pytest.raises(MatrixFormatError):
        matrix_from_json(document)


def test_load_matrix_rejects_malformed_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    with pytest.raises(MatrixFormatError):
        load_matrix(path)
