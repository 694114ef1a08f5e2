"""Qubit states in the Stokes parametrization

Every 2×2 density is ``D_x = ½(I + x·σ)`` for a Stokes vector ``x`` in the
closed unit ball. At radius ``r`` a monotone metric splits into a radial and a
tangential part,

``ds² = dr² / (1 - r²) + 1 / ((1 + r)·f((1 - r) / (1 + r)))·dn²``

The radial part is the same for every kind. The tangential part is constant
for ``sld``, equals ``1 / (1 - r²)`` for ``rld`` and stays bounded as
``r → 1`` exactly when ``f(0) > 0``.

Example:

    .. code-block:: python

        from monometric.bloch import crosscheck_bloch, line_element

        line_element("rld", 0.5, dr=1.0, dn=1.0)  # 8/3
        crosscheck_bloch("km", 0.5, "tangential")  # (1.0986..., 1.0986...)
"""

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
import numpy.typing as npt

from .config import Tolerances
from .errors import DimensionMismatchError, DomainError
from .functions import MonotoneFunctionKind, eval_f, parse_kind
from .hermitian import DEFAULT_FLOOR, DensityMatrix, TangentVector
from .metric import metric_value
from .types import ComplexArray, CrosscheckReport, Direction, ProfileRow, RealArray, TangentialLimit

__all__ = [
    "PAULI",
    "LIMIT_RADII",
    "StokesVector",
    "density_from_stokes",
    "stokes_from_density",
    "radial_coefficient",
    "tangential_coefficient",
    "line_element",
    "unit_tangent",
    "crosscheck_bloch",
    "check_crosscheck",
    "tangential_limit",
    "rotation_unitary",
    "rotation_matrix",
    "bloch_profile",
]

PAULI: Tuple[ComplexArray, ComplexArray, ComplexArray] = (
    np.array([[0, 1], [1, 0]], dtype=np.complex128),
    np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    np.array([[1, 0], [0, -1]], dtype=np.complex128),
)
"""Pauli matrices ``σ₁, σ₂, σ₃``"""

LIMIT_RADII = [1.0 - 10.0**-k for k in range(3, 7)]
"""Radii at which :func:`tangential_limit` samples the tangential coefficient"""

_AXES = {"x": 0, "y": 1, "z": 2}

Kind = Union[str, MonotoneFunctionKind]


@dataclass(frozen=True)
class StokesVector:
    """Point ``(x₁, x₂, x₃)`` of the Bloch ball

    Attributes:
        x (:obj:`tuple` of :obj:`float`): Coordinates
    """

    x: Tuple[float, float, float]

    def __post_init__(self) -> None:
        if len(self.x) != 3:
            raise DimensionMismatchError(f"Stokes vector needs 3 coordinates, got {len(self.x)}")
        if not all(np.isfinite(self.x)):
            raise DomainError(f"Stokes vector has non-finite coordinates {self.x}")
        object.__setattr__(self, "x", tuple(float(value) for value in self.x))

    @property
    def r(self) -> float:
        """:obj:`float`: Euclidean norm"""
        return float(np.linalg.norm(self.x))

    def __array__(self, dtype: object = None, copy: object = None) -> RealArray:
        return np.array(self.x, dtype=dtype or np.float64)


def density_from_stokes(x: Union[StokesVector, Sequence[float]]) -> DensityMatrix:
    """``D_x = ½(I + x₁σ₁ + x₂σ₂ + x₃σ₃)``

    Args:
        x (:class:`StokesVector` | :obj:`list` of :obj:`float`): Point strictly inside the unit ball

    Returns:
        :class:`monometric.hermitian.DensityMatrix`: Density with eigenvalues ``(1 ± r) / 2``

    Raises:
        DomainError: If ``r ≥ 1``
    """
    vector = x if isinstance(x, StokesVector) else StokesVector(tuple(x))  # type: ignore[arg-type]
    r = vector.r
    if r >= 1.0:
        raise DomainError(f"Stokes vector must lie inside the unit ball, got r = {r!r}")
    entries = (np.eye(2) + sum(c * sigma for c, sigma in zip(vector.x, PAULI))) / 2
    return DensityMatrix(entries, floor=min(DEFAULT_FLOOR, (1.0 - r) / 4))


def stokes_from_density(density: DensityMatrix) -> StokesVector:
    """Inverse of :func:`density_from_stokes`, ``x_i = Tr(D·σ_i)``"""
    if density.n != 2:
        raise DimensionMismatchError(f"Stokes coordinates need a 2×2 density, got dimension {density.n}")
    coordinates = [float(np.trace(density.entries @ sigma).real) for sigma in PAULI]
    return StokesVector((coordinates[0], coordinates[1], coordinates[2]))


def _radius(r: float) -> float:
    # r = 0 is the maximally mixed state, where both coefficients equal 1
    if not 0.0 <= r < 1.0:
        raise DomainError(f"Radius must lie in [0, 1), got {r!r}")
    return float(r)


def radial_coefficient(r: float) -> float:
    """``1 / (1 - r²)`` for ``r`` in ``[0, 1)``, the same for every kind"""
    r = _radius(r)
    return 1.0 / (1.0 - r * r)


def tangential_coefficient(kind: Kind, r: float) -> float:
    """``1 / ((1 + r)·f((1 - r) / (1 + r)))`` for ``r`` in ``[0, 1)``"""
    r = _radius(r)
    return 1.0 / ((1.0 + r) * eval_f(parse_kind(kind), (1.0 - r) / (1.0 + r)))


def line_element(kind: Kind, r: float, dr: float, dn: float) -> float:
    """Squared line element ``ds²`` at radius ``r``

    Args:
        kind (:obj:`str` | :class:`monometric.functions.MonotoneFunctionKind`): Catalog entry
        r (:obj:`float`): Radius in ``[0, 1)``
        dr (:obj:`float`): Radial displacement
        dn (:obj:`float`): Tangential displacement

    Returns:
        :obj:`float`: ``radial·dr² + tangential·dn²``

    Raises:
        DomainError: If ``r`` is outside ``[0, 1)``
    """
    return radial_coefficient(r) * dr * dr + tangential_coefficient(kind, r) * dn * dn


def unit_tangent(direction: Union[str, Direction]) -> TangentVector:
    """Tangent of unit displacement at the point ``(0, 0, r)``: ``½σ₃`` radially, ``½σ₁`` tangentially"""
    direction = Direction(direction)
    return TangentVector(PAULI[2] / 2 if direction is Direction.RADIAL else PAULI[0] / 2)


def crosscheck_bloch(kind: Kind, r: float, direction: Union[str, Direction]) -> Tuple[float, float]:
    """Evaluate a Bloch ball coefficient both by the general evaluator and by its closed form

    The base point is ``x = (0, 0, r)`` and the tangent is :func:`unit_tangent`.

    Args:
        kind (:obj:`str` | :class:`monometric.functions.MonotoneFunctionKind`): Catalog entry
        r (:obj:`float`): Radius in ``(1e-3, 1 - 1e-3)``
        direction (:obj:`str` | :class:`monometric.types.Direction`): ``radial`` or ``tangential``

    Returns:
        :obj:`tuple`: ``(general, formula)``
    """
    if not 1e-3 < r < 1.0 - 1e-3:
        raise DomainError(f"Crosscheck radius must lie in (1e-3, 1 - 1e-3), got {r!r}")
    kind = parse_kind(kind)
    direction = Direction(direction)
    density = density_from_stokes((0.0, 0.0, r))
    general = metric_value(kind, density, unit_tangent(direction))
    formula = radial_coefficient(r) if direction is Direction.RADIAL else tangential_coefficient(kind, r)
    return general, formula


def check_crosscheck(
    kind: Kind, r: float, direction: Union[str, Direction], tolerances: Optional[Tolerances] = None
) -> CrosscheckReport:
    """:func:`crosscheck_bloch` with a verdict

    Passes if ``|general - formula| ≤ crosscheck_rel·|formula|``.

    Args:
        kind (:obj:`str` | :class:`monometric.functions.MonotoneFunctionKind`): Catalog entry
        r (:obj:`float`): Radius in ``(1e-3, 1 - 1e-3)``
        direction (:obj:`str` | :class:`monometric.types.Direction`): ``radial`` or ``tangential``
        tolerances (:class:`monometric.config.Tolerances`, optional): Tolerances, defaults apply if omitted

    Returns:
        :obj:`monometric.types.CrosscheckReport`: Both values and the verdict
    """
    tolerances = tolerances or Tolerances()
    kind = parse_kind(kind)
    direction = Direction(direction)
    general, formula = crosscheck_bloch(kind, r, direction)
    return CrosscheckReport(
        kind=kind.identifier,
        r=float(r),
        direction=direction.value,
        general=general,
        formula=formula,
        passed=abs(general - formula) <= tolerances.crosscheck_rel * abs(formula),
    )


def tangential_limit(kind: Kind) -> TangentialLimit:
    """Limit of the tangential coefficient at the boundary of the ball

    The limit is ``1 / (2·f(0))`` if ``f(0) > 0`` and the coefficient diverges
    otherwise. The coefficient is sampled at :data:`LIMIT_RADII` for reference.
    """
    kind = parse_kind(kind)
    f0 = kind.f_at_zero
    samples = [(r, tangential_coefficient(kind, r)) for r in LIMIT_RADII]
    return TangentialLimit(
        kind=kind.identifier,
        f0=f0,
        limit=1.0 / (2.0 * f0) if f0 > 0 else None,
        divergent=f0 == 0,
        samples=samples,
    )


def rotation_unitary(axis: Union[str, int], angle: float) -> ComplexArray:
    """``exp(-i·angle·σ_axis / 2)``

    Conjugation with this unitary rotates Stokes vectors by :func:`rotation_matrix`.

    Args:
        axis (:obj:`str` | :obj:`int`): ``x``, ``y``, ``z`` or ``0``, ``1``, ``2``
        angle (:obj:`float`): Rotation angle in radians
    """
    sigma = PAULI[_axis(axis)]
    return np.cos(angle / 2) * np.eye(2) - 1j * np.sin(angle / 2) * sigma  # type: ignore[no-any-return]


def rotation_matrix(axis: Union[str, int], angle: float) -> RealArray:
    """Right handed 3×3 rotation about a coordinate axis"""
    index = _axis(axis)
    c, s = np.cos(angle), np.sin(angle)
    i, j = [k for k in range(3) if k != index]
    rotation = np.eye(3)
    rotation[i, i] = rotation[j, j] = c
    rotation[j, i] = s
    rotation[i, j] = -s
    if index == 1:
        rotation = rotation.T
    return rotation


def _axis(axis: Union[str, int]) -> int:
    if isinstance(axis, str):
        if axis.lower() not in _AXES:
            raise DomainError(f"Unknown axis '{axis}', use x, y or z")
        return _AXES[axis.lower()]
    if axis not in (0, 1, 2):
        raise DomainError(f"Axis index must be 0, 1 or 2, got {axis}")
    return int(axis)


def bloch_profile(kinds: Iterable[Kind], grid: npt.ArrayLike) -> List[ProfileRow]:
    """Radial and tangential coefficients over a radius grid

    Args:
        kinds (:obj:`list`): Catalog entries
        grid (:obj:`numpy.typing.ArrayLike`): Radii in ``(0, 1)``

    Returns:
        :obj:`list` of :obj:`monometric.types.ProfileRow`: One row per radius and kind, radius major

    Raises:
        DomainError: If the grid is empty or has a radius outside ``(0, 1)``
    """
    radii = np.atleast_1d(np.asarray(grid, dtype=np.float64))
    if radii.size == 0:
        raise DomainError("Radius grid is empty")
    if not np.all((radii > 0) & (radii < 1)):
        raise DomainError(f"Radii must lie in (0, 1), got {radii.tolist()}")
    parsed = [parse_kind(kind) for kind in kinds]
    return [
        ProfileRow(
            r=float(r),
            kind=kind.identifier,
            radial=radial_coefficient(float(r)),
            tangential=tangential_coefficient(kind, float(r)),
        )
        for r in radii
        for kind in parsed
    ]
