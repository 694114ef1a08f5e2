"""Pure states as the boundary of the density manifold

A density with a simple largest eigenvalue projects radially onto the pure
state of its top eigenvector (:func:`radial_projection`). Tangents of the
pure states at ``e₁`` are given by horizontal vectors ``u = (u₂, …, u_n)``
and lift to tangents at a diagonal density ``D = Diag(λ₁, …, λ_n)``
(:func:`horizontal_lift`). The metric of the lifts has the closed form

``2·Re Σ_{i≥2} (λ₁ - λ_i)² / (λ₁·f(λ_i / λ₁))·u_i·conj(v_i)``

As ``D`` approaches the pure state every coefficient tends to ``1 / f(0)``,
so the radial extension exists exactly when ``f(0) > 0`` and it equals the
Fubini-Study form ``h(u, v) = 2·Re Σ u_i·conj(v_i)`` divided by ``f(0)``
(:func:`radial_extension_limit`).

Example:

    .. code-block:: python

        from monometric.boundary import BoundarySequence, radial_extension_limit

        sequence = BoundarySequence(weights=[1.0, 2.0])
        report = radial_extension_limit("sld", sequence, [1.0, 0.5j])
        report["limit"]  # 2 * h(u, u) = 5.0
"""

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Union

import numpy as np
import numpy.typing as npt

from .errors import DegenerateSpectrumError, DimensionMismatchError, DomainError
from .functions import MonotoneFunctionKind, eval_f, parse_kind
from .hermitian import DensityMatrix, HermitianMatrix, TangentVector, require_unitary
from .metric import DEGENERACY_GAP, metric_value
from .types import ComplexArray, LimitReport, RealArray

__all__ = [
    "DEFAULT_GRID",
    "DIVERGENCE_FACTOR",
    "LIFT_TO_BLOCH_SCALE",
    "PureState",
    "HorizontalVector",
    "BoundarySequence",
    "radial_projection",
    "horizontal_lift",
    "lifted_inner",
    "fubini_study",
    "radial_extension_limit",
]

DEFAULT_GRID = [10.0**-k for k in range(2, 13)]
"""Default ε grid, ``1e-2`` down to ``1e-12``"""

DIVERGENCE_FACTOR = 1e3
"""A divergent sequence exceeds ``DIVERGENCE_FACTOR·|h(u, v)|`` in :attr:`LimitReport.exceeds_threshold`"""

LIFT_TO_BLOCH_SCALE = 4.0
"""For ``n = 2`` and ``u = (1)`` the radial extension is this multiple of the Bloch tangential limit.

The lift of ``u = (1)`` at ``Diag((1 + r) / 2, (1 - r) / 2)`` is ``2r`` times the unit tangent ``½σ₁``.
"""

_MONOTONE_SLACK = 1e-12

Kind = Union[str, MonotoneFunctionKind]


class PureState:
    """Unit vector up to phase, with its projector

    The phase is fixed so that the first non-negligible component is real and positive.

    Args:
        vector (:obj:`numpy.typing.ArrayLike`): Non-zero complex vector, normalized on construction

    Attributes:
        vector (:obj:`numpy.ndarray`): Canonical unit vector
    """

    def __init__(self, vector: npt.ArrayLike) -> None:
        v = np.array(vector, dtype=np.complex128)
        if v.ndim != 1 or v.size == 0:
            raise DimensionMismatchError(f"Pure state needs a non-empty vector, got shape {v.shape}")
        norm = float(np.linalg.norm(v))
        if not np.isfinite(norm) or norm == 0:
            raise DomainError("Pure state vector must be finite and non-zero")
        v = v / norm
        leading = int(np.argmax(np.abs(v) > 1e-12))
        v = v * (abs(v[leading]) / v[leading])
        v[leading] = abs(v[leading])
        v.setflags(write=False)
        self.vector: ComplexArray = v

    @property
    def n(self) -> int:
        return int(self.vector.size)

    @property
    def projector(self) -> HermitianMatrix:
        """:class:`monometric.hermitian.HermitianMatrix`: Rank one projector ``v·v†``"""
        return HermitianMatrix(np.outer(self.vector, self.vector.conj()))

    def __repr__(self) -> str:
        return f"PureState({self.vector.tolist()})"


class HorizontalVector:
    """Tangent of the pure states at ``e₁``, components ``u₂, …, u_n``

    Args:
        components (:obj:`numpy.typing.ArrayLike`): Complex components, one less than the dimension
    """

    def __init__(self, components: npt.ArrayLike) -> None:
        u = np.atleast_1d(np.array(components, dtype=np.complex128))
        if u.ndim != 1 or u.size == 0:
            raise DimensionMismatchError(f"Horizontal vector needs a non-empty vector, got shape {u.shape}")
        if not np.all(np.isfinite(u)):
            raise DomainError("Horizontal vector has non-finite components")
        u.setflags(write=False)
        self.components: ComplexArray = u

    @property
    def n(self) -> int:
        """:obj:`int`: Dimension of the ambient space"""
        return int(self.components.size) + 1

    def __repr__(self) -> str:
        return f"HorizontalVector({self.components.tolist()})"


HorizontalLike = Union[HorizontalVector, npt.ArrayLike]


def _horizontal(value: HorizontalLike) -> HorizontalVector:
    return value if isinstance(value, HorizontalVector) else HorizontalVector(value)


@dataclass
class BoundarySequence:
    """Diagonal densities ``D(ε) = Diag(1 - ε·Σw, ε·w₁, …, ε·w_{n-1})`` approaching ``e₁``

    Args:
        weights (:obj:`list` of :obj:`float`): Positive weights ``w``
        grid (:obj:`list` of :obj:`float`, optional): Strictly decreasing positive ``ε`` values
        rotation (:obj:`numpy.typing.ArrayLike`, optional): Unitary ``U`` to approach ``U·e₁`` instead

    Raises:
        DomainError: If a weight is not positive, the grid is not decreasing, or a density is invalid
    """

    weights: Sequence[float]
    grid: Sequence[float] = field(default_factory=lambda: list(DEFAULT_GRID))
    rotation: Optional[npt.ArrayLike] = None

    def __post_init__(self) -> None:
        w = np.array(self.weights, dtype=np.float64)
        eps = np.array(self.grid, dtype=np.float64)
        if w.ndim != 1 or w.size == 0 or not np.all(np.isfinite(w)) or np.any(w <= 0):
            raise DomainError(f"Weights must be positive, got {list(self.weights)}")
        if eps.ndim != 1 or eps.size == 0 or not np.all(np.isfinite(eps)) or np.any(eps <= 0):
            raise DomainError(f"Grid values must be positive, got {list(self.grid)}")
        if np.any(np.diff(eps) >= 0):
            raise DomainError(f"Grid must be strictly decreasing, got {eps.tolist()}")
        top = 1.0 - eps[0] * w.sum()
        if top - eps[0] * w.max() <= DEGENERACY_GAP:
            raise DomainError(f"Largest grid value {eps[0]} leaves no gap below the top eigenvalue")
        self.weights = w.tolist()
        self.grid = eps.tolist()
        if self.rotation is not None:
            u = require_unitary(self.rotation)
            if u.shape[0] != w.size + 1:
                raise DimensionMismatchError(f"Rotation of dimension {u.shape[0]} at dimension {w.size + 1}")
            self.rotation = u

    @property
    def n(self) -> int:
        return len(self.weights) + 1

    def eigenvalues(self, eps: float) -> RealArray:
        """Diagonal of ``D(ε)``, the first entry is the largest"""
        w = np.asarray(self.weights)
        return np.concatenate([[1.0 - eps * w.sum()], eps * w])  # type: ignore[no-any-return]

    def diagonal(self, eps: float) -> DensityMatrix:
        """``D(ε)`` in the frame of the target pure state"""
        values = self.eigenvalues(eps)
        return DensityMatrix(np.diag(values), floor=float(values[1:].min()) / 2)

    def density(self, eps: float) -> DensityMatrix:
        """``U·D(ε)·U†``, or the diagonal density if there is no rotation"""
        diagonal = self.diagonal(eps)
        if self.rotation is None:
            return diagonal
        u = np.asarray(self.rotation)
        return DensityMatrix(u @ diagonal.entries @ u.conj().T, floor=diagonal.floor)


def radial_projection(density: DensityMatrix) -> PureState:
    """Pure state of the top eigenvector

    Args:
        density (:class:`monometric.hermitian.DensityMatrix`): Density with a simple largest eigenvalue

    Returns:
        :class:`PureState`: Phase canonical top eigenvector

    Raises:
        DegenerateSpectrumError: If ``λ₁ - λ₂ ≤ 1e-8``
    """
    values = density.eigenvalues
    if values.size > 1 and values[0] - values[1] <= DEGENERACY_GAP:
        raise DegenerateSpectrumError(f"Top eigenvalue is degenerate, gap {values[0] - values[1]:.3e}")
    return PureState(density.unitary[:, 0])


def _diagonal_spectrum(density: DensityMatrix) -> RealArray:
    entries = density.entries
    off_diagonal = entries - np.diag(np.diag(entries))
    values = np.diag(entries).real
    if np.max(np.abs(off_diagonal)) > 1e-12 or np.any(values[1:] >= values[0]):
        raise DomainError("Lifts need a diagonal density with the largest eigenvalue first")
    return values  # type: ignore[no-any-return]


def horizontal_lift(density: DensityMatrix, u: HorizontalLike) -> TangentVector:
    """Lift of a horizontal vector to a tangent at a diagonal density

    The lift has ``(λ₁ - λ_i)·conj(u_i)`` in the first row, ``(λ₁ - λ_i)·u_i``
    in the first column and zeros elsewhere. It does not depend on the kind.

    Args:
        density (:class:`monometric.hermitian.DensityMatrix`): Diagonal density, largest eigenvalue first
        u (:class:`HorizontalVector`): Components ``u₂, …, u_n``

    Returns:
        :class:`monometric.hermitian.TangentVector`: The lift

    Raises:
        DomainError: If the density is not diagonal with the largest eigenvalue first
        DimensionMismatchError: If ``u`` does not have ``n - 1`` components
    """
    values = _diagonal_spectrum(density)
    components = _horizontal(u).components
    if components.size != density.n - 1:
        raise DimensionMismatchError(f"Horizontal vector with {components.size} components at dimension {density.n}")
    gaps = values[0] - values[1:]
    lift = np.zeros((density.n, density.n), dtype=np.complex128)
    lift[0, 1:] = gaps * components.conj()
    lift[1:, 0] = gaps * components
    return TangentVector(lift)


def lifted_inner(kind: Kind, density: DensityMatrix, u: HorizontalLike, v: Optional[HorizontalLike] = None) -> float:
    """Metric of two lifts by the closed form

    Args:
        kind (:obj:`str` | :class:`monometric.functions.MonotoneFunctionKind`): Catalog entry
        density (:class:`monometric.hermitian.DensityMatrix`): Diagonal density, largest eigenvalue first
        u (:class:`HorizontalVector`): First horizontal vector
        v (:class:`HorizontalVector`, optional): Second horizontal vector, defaults to ``u``

    Returns:
        :obj:`float`: ``2·Re Σ (λ₁ - λ_i)² / (λ₁·f(λ_i / λ₁))·u_i·conj(v_i)``
    """
    values = _diagonal_spectrum(density)
    uc = _horizontal(u).components
    vc = uc if v is None else _horizontal(v).components
    if uc.size != density.n - 1 or vc.size != density.n - 1:
        raise DimensionMismatchError(f"Horizontal vectors need {density.n - 1} components")
    top = values[0]
    coefficients = (top - values[1:]) ** 2 / (top * eval_f(parse_kind(kind), values[1:] / top))
    return float(2.0 * np.sum(coefficients * uc * vc.conj()).real)


def fubini_study(u: HorizontalLike, v: Optional[HorizontalLike] = None) -> float:
    """Fubini-Study form ``h(u, v) = 2·Re Σ u_i·conj(v_i)`` at ``e₁``"""
    uc = _horizontal(u).components
    vc = uc if v is None else _horizontal(v).components
    if uc.size != vc.size:
        raise DimensionMismatchError(f"Horizontal vectors with {uc.size} and {vc.size} components")
    return float(2.0 * np.sum(uc * vc.conj()).real)


def _sequence_value(
    kind: MonotoneFunctionKind, sequence: BoundarySequence, eps: float, u: HorizontalVector, v: HorizontalVector
) -> float:
    diagonal = sequence.diagonal(eps)
    if sequence.rotation is None:
        return lifted_inner(kind, diagonal, u, v)
    rotation = np.asarray(sequence.rotation)
    rotated = sequence.density(eps)
    lifts = [rotation @ horizontal_lift(diagonal, w).entries @ rotation.conj().T for w in (u, v)]
    return metric_value(kind, rotated, lifts[0], lifts[1])


def radial_extension_limit(
    kind: Kind,
    sequence: BoundarySequence,
    u: HorizontalLike,
    v: Optional[HorizontalLike] = None,
    tolerance: float = 1e-5,
) -> LimitReport:
    """Follow the lifted metric along a boundary sequence

    For ``f(0) > 0`` the values converge to ``h(u, v) / f(0)``, the report
    carries the relative errors along the grid. For ``f(0) = 0`` the radial
    extension does not exist and the report is flagged divergent.

    Args:
        kind (:obj:`str` | :class:`monometric.functions.MonotoneFunctionKind`): Catalog entry
        sequence (:class:`BoundarySequence`): Densities approaching the pure state
        u (:class:`HorizontalVector`): First horizontal vector
        v (:class:`HorizontalVector`, optional): Second horizontal vector, defaults to ``u``
        tolerance (:obj:`float`, optional): Accepted final relative error for ``converged``

    Returns:
        :obj:`monometric.types.LimitReport`: The report
    """
    kind = parse_kind(kind)
    uh = _horizontal(u)
    vh = uh if v is None else _horizontal(v)
    if uh.n != sequence.n or vh.n != sequence.n:
        raise DimensionMismatchError(f"Horizontal vectors need {sequence.n - 1} components")

    h = fubini_study(uh, vh)
    f0 = kind.f_at_zero
    values = [_sequence_value(kind, sequence, eps, uh, vh) for eps in sequence.grid]

    if f0 > 0:
        limit = h / f0
        scale = abs(limit) if limit != 0 else 1.0
        errors = [abs(value - limit) / scale for value in values]
        monotone = all(later <= earlier + _MONOTONE_SLACK for earlier, later in zip(errors, errors[1:]))
        return LimitReport(
            kind=kind.identifier,
            f0=f0,
            fubini_study=h,
            limit=limit,
            divergent=False,
            values=values,
            errors=errors,
            final_error=errors[-1],
            monotone=monotone,
            converged=monotone and errors[-1] <= tolerance,
            exceeds_threshold=False,
        )

    magnitudes = [abs(value) for value in values]
    return LimitReport(
        kind=kind.identifier,
        f0=f0,
        fubini_study=h,
        limit=None,
        divergent=True,
        values=values,
        errors=[],
        final_error=None,
        monotone=all(later > earlier for earlier, later in zip(magnitudes, magnitudes[1:])),
        converged=False,
        exceeds_threshold=magnitudes[-1] > DIVERGENCE_FACTOR * abs(h),
    )
