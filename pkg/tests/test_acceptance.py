"""Large seeded samples of the defining properties

Deselect with ``pytest -m "not acceptance"`` for a quick run.
"""
import math

import numpy as np
import pytest

from monometric.classical import embed_diagonal, embed_tangent, fisher_form, geodesic_distance, hellinger
from monometric.config import RunConfig
from monometric.functions import DEFAULT_KINDS
from monometric.fuzz import run_suite
from monometric.hermitian import random_density
from monometric.metric import metric_value

pytestmark = pytest.mark.acceptance

DENSITY_SAMPLES = 1000
PROPERTY_SAMPLES = 500


def simplex_point(rng, size, floor=0.0):
    p = floor + (1 - size * floor) * rng.dirichlet(np.ones(size))
    return p / p.sum()


def zero_sum(rng, size):
    u = rng.standard_normal(size)
    return u - u.mean()


def config(**values):
    return RunConfig(trials=PROPERTY_SAMPLES, density_floor=1e-3, workers=4, **values)


def test_random_densities():
    for seed in range(DENSITY_SAMPLES):
        n = 2 + seed % 4
        density = random_density(n, seed)
        entries = density.entries
        assert entries.shape == (n, n)
        np.testing.assert_allclose(entries, entries.conj().T, atol=1e-12)
        assert density.trace() == pytest.approx(1.0, abs=1e-10)
        assert density.eigenvalues[-1] >= 1e-9
        np.testing.assert_array_equal(random_density(n, seed).entries, entries)


def test_ordering_suite():
    report = run_suite("ordering", config(seed=1))
    assert report["failures"] == 0
    assert report["passes"] == PROPERTY_SAMPLES * len(DEFAULT_KINDS)


def test_contraction_suite():
    report = run_suite("monotone", config(seed=2))
    assert report["failures"] == 0
    assert report["passes"] + report["skips"] == PROPERTY_SAMPLES * (1 + len(DEFAULT_KINDS))
    assert report["passes"] > report["skips"]


def test_schwarz_suite():
    report = run_suite("schwarz", config(seed=3))
    assert report["failures"] == 0
    assert report["passes"] + report["skips"] == PROPERTY_SAMPLES


def test_diagonal_embedding_is_fisher():
    rng = np.random.default_rng(4)
    for index in range(PROPERTY_SAMPLES):
        size = 2 + index % 4
        p = simplex_point(rng, size, floor=1e-3)
        u, v = zero_sum(rng, size), zero_sum(rng, size)
        density, a, b = embed_diagonal(p), embed_tangent(u), embed_tangent(v)
        expected = fisher_form(p, u, v)
        for kind in DEFAULT_KINDS:
            value = metric_value(kind, density, a, b)
            assert value == pytest.approx(expected, rel=1e-10, abs=1e-12 * fisher_form(p, u, u)), (kind, index)


def test_hellinger_matches_geodesic():
    rng = np.random.default_rng(5)
    for index in range(PROPERTY_SAMPLES):
        size = 2 + index % 5
        p, r = simplex_point(rng, size), simplex_point(rng, size)
        assert hellinger(p, r) == pytest.approx(2 * math.sin(geodesic_distance(p, r) / 4), abs=1e-7), index
