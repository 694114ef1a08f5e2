"""Fisher geometry of the probability simplex

The map ``p ↦ z = 2√p`` sends the simplex onto a portion of the sphere of
radius 2, and the Fisher metric ``Σ u_i v_i / p_i`` becomes the Euclidean
metric of that sphere. Distances are great circle arcs,
``d(p, r) = 2·arccos Σ √(p_i r_i)``, and relate to the Hellinger distance by
``d_H = 2·sin(d / 4)``.

Diagonal densities carry the same geometry: every monotone metric restricted
to commuting tangents at ``Diag(p)`` is the Fisher metric
(:func:`embed_diagonal`, :func:`embed_tangent`).
"""

from typing import Sequence, Union

import numpy as np
import numpy.typing as npt

from .errors import DimensionMismatchError, DomainError
from .hermitian import DEFAULT_FLOOR, DensityMatrix, TangentVector
from .types import RealArray

__all__ = [
    "SUM_TOLERANCE",
    "probability_vector",
    "simplex_tangent",
    "parse_vector",
    "fisher_form",
    "geodesic_distance",
    "hellinger",
    "embed_diagonal",
    "embed_tangent",
    "sphere_coordinates",
    "sphere_tangent",
]

SUM_TOLERANCE = 1e-12
"""Accepted deviation of ``Σp`` from 1 and of ``Σu`` from 0"""


def _vector(values: npt.ArrayLike, name: str) -> RealArray:
    v = np.array(values, dtype=np.float64)
    if v.ndim != 1 or v.size == 0:
        raise DimensionMismatchError(f"{name} must be a non-empty vector, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise DomainError(f"{name} has non-finite entries")
    return v


def probability_vector(values: npt.ArrayLike, floor: float = 0.0) -> RealArray:
    """Validate a probability vector

    Args:
        values (:obj:`numpy.typing.ArrayLike`): Candidate entries
        floor (:obj:`float`, optional): Lower bound on every entry, ``0`` allows boundary points

    Returns:
        :obj:`numpy.ndarray`: The vector as float array

    Raises:
        DomainError: If an entry is below the floor or the sum differs from 1
    """
    p = _vector(values, "p")
    if np.any(p < 0):
        raise DomainError(f"Probabilities must be non negative, got {p.tolist()}")
    if floor > 0 and np.any(p < floor):
        raise DomainError(f"Probabilities must be at least {floor:.1e}, got {p.tolist()}")
    total = float(np.sum(p))
    if abs(total - 1.0) > SUM_TOLERANCE:
        raise DomainError(f"Probabilities must sum to 1, got {total!r}")
    return p


def simplex_tangent(values: npt.ArrayLike) -> RealArray:
    """Validate a zero-sum tangent of the simplex

    Raises:
        DomainError: If the entries do not sum to 0
    """
    u = _vector(values, "u")
    total = float(np.sum(u))
    if abs(total) > SUM_TOLERANCE * max(1.0, float(np.max(np.abs(u)))):
        raise DomainError(f"Tangent entries must sum to 0, got {total!r}")
    return u


def parse_vector(text: Union[str, Sequence[float]]) -> RealArray:
    """Parse a vector given as comma separated decimals or a JSON array

    Example:

        .. code-block:: python

            parse_vector("0.5,0.5")  # array([0.5, 0.5])
            parse_vector("[0.25, 0.75]")  # array([0.25, 0.75])
    """
    if not isinstance(text, str):
        return _vector(text, "vector")
    stripped = text.strip().strip("[]")
    try:
        return _vector([float(item) for item in stripped.split(",") if item.strip()], "vector")
    except ValueError as e:
        raise DomainError(f"Cannot parse vector '{text}': {e}") from e


def _same_length(*vectors: RealArray) -> None:
    lengths = {v.size for v in vectors}
    if len(lengths) > 1:
        raise DimensionMismatchError(f"Vectors of different lengths {sorted(lengths)}")


def fisher_form(p: npt.ArrayLike, u: npt.ArrayLike, v: npt.ArrayLike) -> float:
    """Fisher information form ``Σ u_i v_i / p_i``

    Args:
        p (:obj:`numpy.typing.ArrayLike`): Strictly positive probability vector
        u (:obj:`numpy.typing.ArrayLike`): Zero-sum tangent
        v (:obj:`numpy.typing.ArrayLike`): Zero-sum tangent

    Returns:
        :obj:`float`: The form value

    Raises:
        DomainError: If ``p`` has a zero component or a tangent does not sum to 0
    """
    pv = probability_vector(p)
    if np.any(pv <= 0):
        raise DomainError("Fisher form needs strictly positive probabilities")
    uv, vv = simplex_tangent(u), simplex_tangent(v)
    _same_length(pv, uv, vv)
    return float(np.sum(uv * vv / pv))


def _bhattacharyya(p: npt.ArrayLike, r: npt.ArrayLike) -> float:
    pv, rv = probability_vector(p), probability_vector(r)
    _same_length(pv, rv)
    return float(np.clip(np.sum(np.sqrt(pv * rv)), 0.0, 1.0))


def geodesic_distance(p: npt.ArrayLike, r: npt.ArrayLike) -> float:
    """Great circle distance ``2·arccos Σ √(p_i r_i)``

    Boundary points with zero components are allowed.

    Returns:
        :obj:`float`: Distance in ``[0, π]``
    """
    return float(2.0 * np.arccos(_bhattacharyya(p, r)))


def hellinger(p: npt.ArrayLike, r: npt.ArrayLike) -> float:
    """Hellinger distance ``√(Σ (√p_i - √r_i)²)``, equal to ``2·sin(d / 4)``"""
    pv, rv = probability_vector(p), probability_vector(r)
    _same_length(pv, rv)
    return float(np.sqrt(np.sum((np.sqrt(pv) - np.sqrt(rv)) ** 2)))


def embed_diagonal(p: npt.ArrayLike, floor: float = DEFAULT_FLOOR) -> DensityMatrix:
    """Diagonal density ``Diag(p)``

    Raises:
        NotStrictlyPositiveError: If an entry is below ``floor``
    """
    return DensityMatrix(np.diag(probability_vector(p)), floor=floor)


def embed_tangent(u: npt.ArrayLike) -> TangentVector:
    """Diagonal tangent ``Diag(u)``"""
    return TangentVector(np.diag(simplex_tangent(u)))


def sphere_coordinates(p: npt.ArrayLike) -> RealArray:
    """Coordinates ``z_i = 2√p_i`` on the sphere of radius 2"""
    return 2.0 * np.sqrt(probability_vector(p))  # type: ignore[no-any-return]


def sphere_tangent(p: npt.ArrayLike, u: npt.ArrayLike) -> RealArray:
    """Image ``u_i / √p_i`` of a simplex tangent, its squared length is the Fisher form"""
    pv = probability_vector(p)
    if np.any(pv <= 0):
        raise DomainError("Sphere tangents need strictly positive probabilities")
    uv = simplex_tangent(u)
    _same_length(pv, uv)
    return uv / np.sqrt(pv)  # type: ignore[no-any-return]
