import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from monometric.classical import (
    embed_diagonal,
    embed_tangent,
    fisher_form,
    geodesic_distance,
    hellinger,
    parse_vector,
    probability_vector,
    simplex_tangent,
    sphere_coordinates,
    sphere_tangent,
)
from monometric.errors import DimensionMismatchError, DomainError, NotStrictlyPositiveError
from monometric.functions import DEFAULT_KINDS
from monometric.metric import metric_value

seeds = st.integers(min_value=0, max_value=2**32 - 1)
sizes = st.integers(min_value=2, max_value=6)


def simplex_point(size, seed, floor=1e-3):
    rng = np.random.default_rng(seed)
    p = floor + (1 - size * floor) * rng.dirichlet(np.ones(size))
    return p / p.sum()


def zero_sum(size, seed):
    u = np.random.default_rng(seed).standard_normal(size)
    return u - u.mean()


def test_fisher_form_examples():
    assert fisher_form([0.5, 0.5], [0.5, -0.5], [0.5, -0.5]) == pytest.approx(1.0)
    assert fisher_form([0.75, 0.25], [0.5, -0.5], [0.5, -0.5]) == pytest.approx(4 / 3)


@given(size=sizes, seed=seeds)
def test_fisher_form_is_bilinear_and_symmetric(size, seed):
    p = simplex_point(size, [seed, 0])
    u, v, w = (zero_sum(size, [seed, k]) for k in (1, 2, 3))
    assert fisher_form(p, u, v) == pytest.approx(fisher_form(p, v, u), rel=1e-12)
    combined = fisher_form(p, 2 * u + w, v)
    assert combined == pytest.approx(2 * fisher_form(p, u, v) + fisher_form(p, w, v), rel=1e-9, abs=1e-9)
    assert fisher_form(p, u, u) >= 0


@pytest.mark.parametrize(
    "p, u, error",
    [
        ([1.0, 0.0], [0.5, -0.5], DomainError),
        ([0.5, 0.6], [0.5, -0.5], DomainError),
        ([0.5, 0.5], [0.5, 0.5], DomainError),
        ([0.5, 0.5], [0.5, -0.25, -0.25], DimensionMismatchError),
        ([[0.5, 0.5]], [0.5, -0.5], DimensionMismatchError),
    ],
)
def test_fisher_form_rejects(p, u, error):
    with pytest.raises(error):
        fisher_form(p, u, u)


def test_probability_vector_floor():
    with pytest.raises(DomainError):
        probability_vector([0.999, 0.001], floor=0.01)
    with pytest.raises(DomainError):
        probability_vector([1.5, -0.5])
    np.testing.assert_array_equal(probability_vector([1, 0]), [1.0, 0.0])


def test_simplex_tangent_rejects_non_finite():
    with pytest.raises(DomainError):
        simplex_tangent([math.inf, -math.inf])


def test_geodesic_examples():
    assert geodesic_distance([0.3, 0.7], [0.3, 0.7]) == pytest.approx(0.0, abs=1e-7)
    assert geodesic_distance([1, 0], [0, 1]) == pytest.approx(math.pi)
    assert geodesic_distance([1, 0], [0.5, 0.5]) == pytest.approx(math.pi / 2)


@given(size=sizes, seed=seeds)
def test_geodesic_triangle_inequality(size, seed):
    p, q, r = (simplex_point(size, [seed, k], floor=0.0) for k in range(3))
    assert geodesic_distance(p, r) <= geodesic_distance(p, q) + geodesic_distance(q, r) + 1e-7
    assert 0.0 <= geodesic_distance(p, q) <= math.pi
    assert geodesic_distance(p, q) == pytest.approx(geodesic_distance(q, p), abs=1e-12)


def test_hellinger_examples():
    assert hellinger([1, 0], [0.5, 0.5]) == pytest.approx(2 * math.sin(math.pi / 8))
    assert hellinger([1, 0], [0.5, 0.5]) == pytest.approx(0.765367, abs=1e-6)
    assert hellinger([1, 0], [0, 1]) == pytest.approx(math.sqrt(2))


@given(size=sizes, seed=seeds)
def test_hellinger_matches_geodesic(size, seed):
    p, r = simplex_point(size, [seed, 0], floor=0.0), simplex_point(size, [seed, 1], floor=0.0)
    assert hellinger(p, r) == pytest.approx(2 * math.sin(geodesic_distance(p, r) / 4), abs=1e-7)


def test_distance_length_mismatch():
    with pytest.raises(DimensionMismatchError):
        geodesic_distance([0.5, 0.5], [0.2, 0.3, 0.5])
    with pytest.raises(DimensionMismatchError):
        hellinger([0.5, 0.5], [0.2, 0.3, 0.5])


@pytest.mark.parametrize("kind", DEFAULT_KINDS)
@given(size=st.integers(min_value=2, max_value=4), seed=seeds)
def test_diagonal_embedding_is_fisher(kind, size, seed):
    p = simplex_point(size, [seed, 0])
    u, v = zero_sum(size, [seed, 1]), zero_sum(size, [seed, 2])
    expected = fisher_form(p, u, v)
    value = metric_value(kind, embed_diagonal(p), embed_tangent(u), embed_tangent(v))
    assert value == pytest.approx(expected, rel=1e-10, abs=1e-12 * fisher_form(p, u, u))


def test_embed_diagonal_rejects_boundary_points():
    with pytest.raises(NotStrictlyPositiveError):
        embed_diagonal([1.0, 0.0])


@pytest.mark.parametrize("text", ["0.25,0.75", "[0.25, 0.75]", " 0.25 , 0.75 ", [0.25, 0.75]])
def test_parse_vector(text):
    np.testing.assert_array_equal(parse_vector(text), [0.25, 0.75])


@pytest.mark.parametrize("text", ["", "[]", "0.5,abc", "nan,0.5"])
def test_parse_vector_rejects(text):
    with pytest.raises((DomainError, DimensionMismatchError)):
        parse_vector(text)


@given(size=sizes, seed=seeds)
def test_sphere_coordinates(size, seed):
    p = simplex_point(size, [seed, 0])
    u = zero_sum(size, [seed, 1])
    assert np.linalg.norm(sphere_coordinates(p)) == pytest.approx(2.0, rel=1e-12)
    assert np.sum(sphere_tangent(p, u) ** 2) == pytest.approx(fisher_form(p, u, u), rel=1e-12)


def test_sphere_tangent_rejects_boundary_points():
    with pytest.raises(DomainError):
        sphere_tangent([1.0, 0.0], [0.5, -0.5])
