"""Monotone metrics on densities

The canonical evaluator is :func:`metric_value`. It works in the eigenbasis
``D = U·Diag(p)·U†`` of the base point, where the metric of the catalog entry
``f`` reads

.. code-block:: text

    K_D(A, B) = Re Σ_jk c(p_j, p_k)·conj(A'_jk)·B'_jk,    A' = U†AU, B' = U†BU

with the Morozova-Chentsov function ``c`` of ``f``. The closed forms in this
module (:func:`metric_sld`, :func:`metric_rld`, :func:`metric_km_quadrature`)
are independent oracles for it.

Example:

    .. code-block:: python

        import numpy as np
        from monometric.hermitian import DensityMatrix, TangentVector
        from monometric.metric import metric_rld, metric_sld, metric_value

        D = DensityMatrix(np.diag([0.75, 0.25]))
        A = TangentVector([[0, 1], [1, 0]])

        metric_sld(D, A, A)  # 4.0
        metric_value("km", D, A)  # 4 log 3
        metric_rld(D, A, A)  # 16 / 3
"""

import math
from typing import Optional, Tuple, Union

import numpy as np
from scipy import integrate

from .errors import DegenerateSpectrumError, DimensionMismatchError, DomainError, NumericalFailureError
from .functions import MonotoneFunctionKind, mc_matrix, parse_kind
from .hermitian import DensityMatrix, HermitianMatrix, MatrixLike, TangentVector, as_matrix, to_eigenbasis
from .logging import LOGGER
from .types import CommutatorReport, ComplexArray

__all__ = [
    "LYAPUNOV_TOLERANCE",
    "DEGENERACY_GAP",
    "metric_value",
    "metric_rld",
    "solve_lyapunov",
    "metric_sld",
    "metric_km_quadrature",
    "commutator_form",
    "mc_function_from_pair",
    "decompose_tangent",
]

LYAPUNOV_TOLERANCE = 1e-10
"""Largest accepted ``‖DG + GD - 2B‖_F / ‖B‖_F``"""

DEGENERACY_GAP = 1e-8
"""Eigenvalues closer than this are considered degenerate"""

Kind = Union[str, MonotoneFunctionKind]


def _pair(density: DensityMatrix, a: MatrixLike, b: Optional[MatrixLike]) -> Tuple[ComplexArray, ComplexArray]:
    a_entries = a.entries if isinstance(a, HermitianMatrix) else as_matrix(a)
    b_entries = a_entries if b is None else (b.entries if isinstance(b, HermitianMatrix) else as_matrix(b))
    for entries in (a_entries, b_entries):
        if entries.shape[0] != density.n:
            raise DimensionMismatchError(
                f"Tangent of dimension {entries.shape[0]} at a density of dimension {density.n}"
            )
    return a_entries, b_entries


def metric_value(kind: Kind, density: DensityMatrix, a: MatrixLike, b: Optional[MatrixLike] = None) -> float:
    """Evaluate ``K_D(A, B)`` with the eigenbasis formula

    Args:
        kind (:obj:`str` | :class:`monometric.functions.MonotoneFunctionKind`): Catalog entry
        density (:class:`monometric.hermitian.DensityMatrix`): Base point ``D``
        a (:obj:`monometric.hermitian.MatrixLike`): Tangent ``A``
        b (:obj:`monometric.hermitian.MatrixLike`, optional): Tangent ``B``, defaults to ``A``

    Returns:
        :obj:`float`: ``K_D(A, B)``, non negative for ``A = B``

    Raises:
        DimensionMismatchError: If a tangent does not match the dimension of ``D``
    """
    a_entries, b_entries = _pair(density, a, b)
    a_prime = to_eigenbasis(density, a_entries)
    b_prime = a_prime if b is None else to_eigenbasis(density, b_entries)
    c = mc_matrix(kind, density.eigenvalues)
    return float(np.sum(c * (a_prime.conj() * b_prime)).real)


def metric_rld(density: DensityMatrix, a: MatrixLike, b: Optional[MatrixLike] = None) -> float:
    """Largest monotone metric ``½·Re Tr(D⁻¹(AB + BA))``

    Args:
        density (:class:`monometric.hermitian.DensityMatrix`): Base point ``D``
        a (:obj:`monometric.hermitian.MatrixLike`): Tangent ``A``
        b (:obj:`monometric.hermitian.MatrixLike`, optional): Tangent ``B``, defaults to ``A``

    Returns:
        :obj:`float`: The RLD metric value
    """
    a_entries, b_entries = _pair(density, a, b)
    anticommutator = a_entries @ b_entries + b_entries @ a_entries
    return float(np.trace(density.inverse() @ anticommutator).real / 2.0)


def solve_lyapunov(density: DensityMatrix, b: MatrixLike) -> HermitianMatrix:
    """Solve ``DG + GD = 2B``

    In the eigenbasis of ``D`` the solution is ``G'_jk = 2B'_jk / (p_j + p_k)``.

    Args:
        density (:class:`monometric.hermitian.DensityMatrix`): Strictly positive ``D``
        b (:obj:`monometric.hermitian.MatrixLike`): Hermitian right hand side

    Returns:
        :class:`monometric.hermitian.HermitianMatrix`: ``G``

    Raises:
        NumericalFailureError: If the residual exceeds :data:`LYAPUNOV_TOLERANCE`
    """
    b_entries, _ = _pair(density, b, None)
    p = density.eigenvalues
    u = density.unitary
    g_prime = 2.0 * to_eigenbasis(density, b_entries) / (p[:, None] + p[None, :])
    g = HermitianMatrix(u @ g_prime @ u.conj().T)

    d = density.entries
    residual = float(np.linalg.norm(d @ g.entries + g.entries @ d - 2.0 * b_entries))
    if residual > LYAPUNOV_TOLERANCE * float(np.linalg.norm(b_entries)):
        raise NumericalFailureError(f"Lyapunov residual {residual:.3e} exceeds tolerance")
    return g


def metric_sld(density: DensityMatrix, a: MatrixLike, b: Optional[MatrixLike] = None) -> float:
    """Smallest monotone metric ``Re Tr(A·G)`` where ``DG + GD = 2B``

    Args:
        density (:class:`monometric.hermitian.DensityMatrix`): Base point ``D``
        a (:obj:`monometric.hermitian.MatrixLike`): Tangent ``A``
        b (:obj:`monometric.hermitian.MatrixLike`, optional): Tangent ``B``, defaults to ``A``

    Returns:
        :obj:`float`: The SLD metric value
    """
    a_entries, b_entries = _pair(density, a, b)
    g = solve_lyapunov(density, b_entries)
    return float(np.trace(a_entries @ g.entries).real)


def metric_km_quadrature(
    density: DensityMatrix, a: MatrixLike, b: Optional[MatrixLike] = None, rel_tol: float = 1e-8
) -> float:
    """Kubo-Mori metric ``∫₀^∞ Tr((D+t)⁻¹·A·(D+t)⁻¹·B) dt`` by adaptive quadrature

    The half line is mapped onto ``[0, 1)`` with ``t = s / (1 - s)``.

    Args:
        density (:class:`monometric.hermitian.DensityMatrix`): Base point ``D``
        a (:obj:`monometric.hermitian.MatrixLike`): Tangent ``A``
        b (:obj:`monometric.hermitian.MatrixLike`, optional): Tangent ``B``, defaults to ``A``
        rel_tol (:obj:`float`, optional): Relative tolerance in ``[1e-10, 1e-3]``

    Returns:
        :obj:`float`: The Kubo-Mori metric value

    Raises:
        DomainError: If ``rel_tol`` is out of range
        NumericalFailureError: If the quadrature does not converge
    """
    if not 1e-10 <= rel_tol <= 1e-3:
        raise DomainError(f"Relative tolerance must lie in [1e-10, 1e-3], got {rel_tol}")
    a_entries, b_entries = _pair(density, a, b)
    d = density.entries
    identity = np.eye(density.n)
    at_infinity = float(np.trace(a_entries @ b_entries).real)

    def integrand(s: float) -> float:
        if s >= 1.0:
            return at_infinity
        t = s / (1.0 - s)
        resolvent = np.linalg.inv(d + t * identity)
        value = np.trace(resolvent @ a_entries @ resolvent @ b_entries).real
        return float(value) / (1.0 - s) ** 2

    scale = float(np.linalg.norm(a_entries) * np.linalg.norm(b_entries))
    if scale == 0.0:
        return 0.0
    result = integrate.quad(integrand, 0.0, 1.0, epsabs=1e-14 * scale, epsrel=rel_tol, limit=200, full_output=1)
    if len(result) > 3:
        raise NumericalFailureError(f"Kubo-Mori quadrature did not converge: {result[3]}")
    value, error = result[0], result[1]
    LOGGER.debug("Kubo-Mori quadrature: value=%r, error estimate=%r", value, error)
    return float(value)


def commutator_form(density: DensityMatrix, x: MatrixLike, alpha: float) -> CommutatorReport:
    """Compare the WYD metric on commutator tangents with the raw trace expression

    For the tangent ``i[D, X]`` the eigenbasis value of ``wyd:α`` is a constant
    multiple of ``Tr([D^β, X][D^(1-β), X])``, ``β = (1 - α) / 2``. The constant
    only depends on ``α`` and equals ``-4 / (1 - α²)``.

    Args:
        density (:class:`monometric.hermitian.DensityMatrix`): Base point ``D``
        x (:obj:`monometric.hermitian.MatrixLike`): Hermitian ``X``
        alpha (:obj:`float`): WYD parameter in ``(-3, 3)``, not ``±1``

    Returns:
        :obj:`monometric.types.CommutatorReport`: Both values and their ratio

    Raises:
        DomainError: If ``alpha`` is out of range
    """
    if abs(alpha) == 1.0:
        raise DomainError("alpha = ±1 has no commutator form, the raw trace prefactor diverges")
    kind = parse_kind(f"wyd:{float(alpha)!r}")
    x_entries = HermitianMatrix(x).entries
    d = density.entries
    tangent = 1j * (d @ x_entries - x_entries @ d)

    beta = (1.0 - alpha) / 2.0
    d_beta = density.power(beta)
    d_rest = density.power(1.0 - beta)
    raw = float(np.trace((d_beta @ x_entries - x_entries @ d_beta) @ (d_rest @ x_entries - x_entries @ d_rest)).real)
    value = metric_value(kind, density, tangent)

    threshold = 1e-12 * max(1.0, float(np.linalg.norm(x_entries)) ** 2)
    return CommutatorReport(
        alpha=alpha,
        metric_value=value,
        raw_trace=raw,
        ratio=value / raw if abs(raw) > threshold else None,
        expected_ratio=-4.0 / (1.0 - alpha * alpha),
    )


def mc_function_from_pair(p: float, lam: float, mu: float) -> float:
    """Morozova-Chentsov function built from the pair ``g(x) = x^p``, ``g*(x) = x^(1-p) / (p(1-p))``

    Returns ``(g(λ) - g(μ))·(g*(λ) - g*(μ)) / (λ - μ)²``, which is the
    Morozova-Chentsov function of ``wyd:α`` with ``α = 1 - 2p``.

    Args:
        p (:obj:`float`): Exponent in ``(0, 1)``
        lam (:obj:`float`): Positive ``λ``
        mu (:obj:`float`): Positive ``μ``

    Returns:
        :obj:`float`: The quotient, ``1 / λ`` if ``λ = μ``

    Raises:
        DomainError: If ``p`` is outside ``(0, 1)`` or an argument is not positive
    """
    if not 0.0 < p < 1.0:
        raise DomainError(f"Exponent must lie in (0, 1), got {p}")
    if not (lam > 0 and mu > 0 and math.isfinite(lam) and math.isfinite(mu)):
        raise DomainError(f"Arguments must be positive, got {lam}, {mu}")
    if lam == mu:
        return 1.0 / lam

    a = 1.0
    b = 1.0 / (p * (1.0 - p))
    g = a * (lam**p - mu**p)
    g_star = b * (lam ** (1.0 - p) - mu ** (1.0 - p))
    return g * g_star / (lam - mu) ** 2


def decompose_tangent(density: DensityMatrix, a: MatrixLike) -> Tuple[TangentVector, TangentVector]:
    """Split a tangent into the part commuting with ``D`` and the orthogonal rest

    In the eigenbasis of ``D`` the commuting part is the diagonal and the
    orthogonal part the off-diagonal of ``A'``. Both parts are orthogonal in
    the Hilbert-Schmidt inner product.

    Args:
        density (:class:`monometric.hermitian.DensityMatrix`): Base point with a nondegenerate spectrum
        a (:obj:`monometric.hermitian.MatrixLike`): Tangent ``A``

    Returns:
        :obj:`tuple` of :class:`monometric.hermitian.TangentVector`: ``(commuting, orthogonal)``

    Raises:
        DegenerateSpectrumError: If two eigenvalues are closer than :data:`DEGENERACY_GAP`
    """
    gaps = -np.diff(density.eigenvalues)
    if gaps.size and float(np.min(gaps)) <= DEGENERACY_GAP:
        raise DegenerateSpectrumError(f"Spectrum is degenerate, smallest gap {float(np.min(gaps)):.3e}")

    a_entries, _ = _pair(density, a, None)
    u = density.unitary
    a_prime = to_eigenbasis(density, a_entries)
    commuting = (u * np.diag(a_prime)) @ u.conj().T
    orthogonal = a_entries - commuting
    return TangentVector(commuting), TangentVector(orthogonal)
