import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from monometric.bloch import tangential_coefficient, tangential_limit
from monometric.boundary import (
    DEFAULT_GRID,
    LIFT_TO_BLOCH_SCALE,
    BoundarySequence,
    HorizontalVector,
    PureState,
    fubini_study,
    horizontal_lift,
    lifted_inner,
    radial_extension_limit,
    radial_projection,
)
from monometric.errors import DegenerateSpectrumError, DimensionMismatchError, DomainError, NotUnitaryError
from monometric.functions import DEFAULT_KINDS, parse_kind
from monometric.hermitian import DensityMatrix, random_density, random_unitary
from monometric.metric import metric_value

seeds = st.integers(min_value=0, max_value=2**32 - 1)

BOUNDED = [kind for kind in DEFAULT_KINDS if parse_kind(kind).f_at_zero > 0]
DIVERGENT = [kind for kind in DEFAULT_KINDS if parse_kind(kind).f_at_zero == 0]


def test_kind_split():
    assert BOUNDED == ["sld", "wyd:0", "wyd:0.5", "wyd:-0.5"]
    assert "km" in DIVERGENT and "rld" in DIVERGENT


def test_pure_state_phase():
    np.testing.assert_array_equal(PureState([1j, 0]).vector, [1, 0])
    state = PureState([0, -2, 2j])
    np.testing.assert_allclose(state.vector, [0, 1 / np.sqrt(2), -1j / np.sqrt(2)])
    np.testing.assert_allclose(state.projector.entries @ state.vector, state.vector)


@pytest.mark.parametrize("vector, error", [([0, 0], DomainError), ([], DimensionMismatchError)])
def test_pure_state_rejects(vector, error):
    with pytest.raises(error):
        PureState(vector)


def test_radial_projection_of_diagonal_density(quarter_density):
    np.testing.assert_allclose(radial_projection(quarter_density).vector, [1, 0], atol=1e-15)


def test_radial_projection_of_mixture():
    psi = np.array([1, 1]) / np.sqrt(2)
    density = DensityMatrix(0.9 * np.outer(psi, psi) + 0.05 * np.eye(2))
    np.testing.assert_allclose(radial_projection(density).vector, psi, atol=1e-12)


def test_radial_projection_needs_simple_top_eigenvalue(maximally_mixed):
    with pytest.raises(DegenerateSpectrumError):
        radial_projection(maximally_mixed)


@given(seed=seeds)
def test_radial_projection_is_top_eigenvector(seed):
    density = random_density(3, seed, floor=1e-3)
    state = radial_projection(density)
    top = density.eigenvalues[0]
    np.testing.assert_allclose(density.entries @ state.vector, top * state.vector, atol=1e-12)


def test_horizontal_lift_example(quarter_density):
    np.testing.assert_allclose(horizontal_lift(quarter_density, [1.0]).entries, [[0, 0.5], [0.5, 0]])
    np.testing.assert_array_equal(horizontal_lift(quarter_density, [0.0]).entries, np.zeros((2, 2)))


def test_horizontal_lift_entries():
    density = DensityMatrix(np.diag([0.7, 0.2, 0.1]))
    lift = horizontal_lift(density, HorizontalVector([1j, 2.0])).entries
    np.testing.assert_allclose(lift[0], [0, -0.5j, 1.2])
    np.testing.assert_allclose(lift[:, 0], [0, 0.5j, 1.2])
    np.testing.assert_array_equal(lift[1:, 1:], np.zeros((2, 2)))


@pytest.mark.parametrize(
    "density",
    [
        DensityMatrix(np.diag([0.25, 0.75])),
        DensityMatrix([[0.5, 0.1], [0.1, 0.5]]),
    ],
)
def test_horizontal_lift_needs_top_eigenvalue_first(density):
    with pytest.raises(DomainError):
        horizontal_lift(density, [1.0])


def test_horizontal_lift_component_count(quarter_density):
    with pytest.raises(DimensionMismatchError):
        horizontal_lift(quarter_density, [1.0, 0.0])


def test_horizontal_vector_rejects():
    assert HorizontalVector(0.5).n == 2
    with pytest.raises(DomainError):
        HorizontalVector([np.nan])
    with pytest.raises(DimensionMismatchError):
        HorizontalVector([])


def test_lifted_inner_examples(quarter_density):
    assert lifted_inner("sld", quarter_density, [1.0]) == pytest.approx(1.0)
    assert lifted_inner("rld", quarter_density, [1.0]) == pytest.approx(4 / 3)
    density = DensityMatrix(np.diag([0.7, 0.2, 0.1]))
    assert lifted_inner("km", density, [1.0, 0.0], [0.0, 1.0]) == 0.0


@pytest.mark.parametrize("kind", DEFAULT_KINDS)
@given(seed=seeds)
def test_lifted_inner_matches_metric_of_lifts(kind, seed):
    rng = np.random.default_rng(seed)
    values = np.sort(rng.dirichlet(np.ones(3)) + 1e-3)[::-1]
    density = DensityMatrix(np.diag(values / values.sum()))
    if density.eigenvalues[0] - density.eigenvalues[1] <= 1e-6:
        return
    u = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    v = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    expected = metric_value(kind, density, horizontal_lift(density, u), horizontal_lift(density, v))
    scale = np.sqrt(lifted_inner(kind, density, u) * lifted_inner(kind, density, v))
    assert abs(lifted_inner(kind, density, u, v) - expected) <= 1e-10 * scale


def test_fubini_study():
    assert fubini_study([1.0, 0.5j]) == pytest.approx(2.5)
    assert fubini_study([1.0, 0.0], [0.0, 1.0]) == 0.0
    assert fubini_study([1j], [1.0]) == 0.0
    with pytest.raises(DimensionMismatchError):
        fubini_study([1.0], [1.0, 0.0])


def test_docstring_limit_example():
    report = radial_extension_limit("sld", BoundarySequence(weights=[1.0, 2.0]), [1.0, 0.5j])
    assert report["limit"] == pytest.approx(5.0)
    assert report["fubini_study"] == pytest.approx(2.5)
    assert report["converged"]


@pytest.mark.parametrize(
    "kind, factor, converged", [("sld", 2.0, True), ("wyd:0", 4.0, True), ("wyd:0.5", 1 / (0.25 * 0.75), False)]
)
def test_limit_is_scaled_fubini_study(kind, factor, converged):
    u = [0.3 - 0.4j, 1.0]
    report = radial_extension_limit(kind, BoundarySequence(weights=[1.0, 1.0]), u)
    assert report["limit"] == pytest.approx(factor * fubini_study(u), rel=1e-14)
    assert not report["divergent"]
    assert report["monotone"]
    assert report["converged"] is converged
    assert (report["final_error"] <= 1e-5) is converged
    assert len(report["values"]) == len(DEFAULT_GRID)


@pytest.mark.parametrize("kind", ["km", "rld", "sqrt:0", "km-sq"])
def test_limit_diverges(kind):
    report = radial_extension_limit(kind, BoundarySequence(weights=[1.0]), [1.0])
    assert report["divergent"]
    assert report["limit"] is None
    assert report["final_error"] is None
    assert report["errors"] == []
    assert report["monotone"]
    assert not report["converged"]


def test_rld_exceeds_divergence_threshold():
    assert radial_extension_limit("rld", BoundarySequence(weights=[1.0]), [1.0])["exceeds_threshold"]
    assert not radial_extension_limit("km", BoundarySequence(weights=[1.0]), [1.0])["exceeds_threshold"]


def test_limit_with_strict_tolerance_does_not_converge():
    report = radial_extension_limit("wyd:0", BoundarySequence(weights=[1.0], grid=[1e-2, 1e-3]), [1.0])
    assert report["monotone"]
    assert not report["converged"]
    assert report["final_error"] > 1e-5


def test_limit_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        radial_extension_limit("sld", BoundarySequence(weights=[1.0, 1.0]), [1.0])


@pytest.mark.parametrize("kind", ["sld", "wyd:0"])
@given(seed=seeds)
def test_rotated_sequence_matches_diagonal(kind, seed):
    grid = [1e-2, 1e-3, 1e-4, 1e-5, 1e-6]
    u = [1.0, 0.5 - 0.5j]
    diagonal = radial_extension_limit(kind, BoundarySequence(weights=[1.0, 2.0], grid=grid), u)
    rotation = random_unitary(3, seed)
    rotated = radial_extension_limit(kind, BoundarySequence(weights=[1.0, 2.0], grid=grid, rotation=rotation), u)
    np.testing.assert_allclose(rotated["values"], diagonal["values"], rtol=1e-6)


@given(seed=seeds)
def test_rotated_sequence_projects_to_rotated_state(seed):
    rotation = random_unitary(3, seed)
    sequence = BoundarySequence(weights=[1.0, 2.0], rotation=rotation)
    projected = radial_projection(sequence.density(1e-3))
    overlap = abs(np.vdot(rotation[:, 0], projected.vector))
    assert overlap == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("kind", BOUNDED)
def test_lift_to_bloch_scale(kind):
    report = radial_extension_limit(kind, BoundarySequence(weights=[1.0]), [1.0])
    assert report["limit"] == pytest.approx(LIFT_TO_BLOCH_SCALE * tangential_limit(kind)["limit"], rel=1e-14)


@pytest.mark.parametrize("kind", DEFAULT_KINDS)
def test_lift_to_bloch_scale_inside_the_ball(kind):
    for r in (0.2, 0.5, 0.9):
        density = DensityMatrix(np.diag([(1 + r) / 2, (1 - r) / 2]))
        expected = LIFT_TO_BLOCH_SCALE * r * r * tangential_coefficient(kind, r)
        assert lifted_inner(kind, density, [1.0]) == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize(
    "weights, grid",
    [
        ([], DEFAULT_GRID),
        ([1.0, 0.0], DEFAULT_GRID),
        ([1.0], []),
        ([1.0], [1e-3, 1e-2]),
        ([1.0], [1e-3, 1e-3]),
        ([1.0], [0.6, 1e-3]),
        ([1.0], [1e-3, -1e-4]),
    ],
)
def test_boundary_sequence_rejects(weights, grid):
    with pytest.raises(DomainError):
        BoundarySequence(weights=weights, grid=grid)


def test_boundary_sequence_rotation_checks():
    with pytest.raises(DimensionMismatchError):
        BoundarySequence(weights=[1.0], rotation=random_unitary(3, 0))
    with pytest.raises(NotUnitaryError):
        BoundarySequence(weights=[1.0], rotation=2 * np.eye(2))


def test_boundary_sequence_densities():
    sequence = BoundarySequence(weights=[1.0, 3.0])
    np.testing.assert_allclose(sequence.eigenvalues(1e-2), [0.96, 0.01, 0.03])
    assert sequence.n == 3
    assert sequence.density(1e-2).trace() == pytest.approx(1.0)
    assert horizontal_lift(sequence.diagonal(1e-2), [1.0, 1.0]).entries[0, 2] == pytest.approx(0.93)
