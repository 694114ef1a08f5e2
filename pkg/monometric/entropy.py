"""Entropies and entropy Hessians

Relative entropies are evaluated spectrally. Metrics are recovered from them
as mixed second derivatives, approximated here by central differences:

* :func:`hessian_metric` differentiates ``Tr G(D + tA + sB)``. For
  ``G(t) = t·log t`` this is the Kubo-Mori metric.
* :func:`alpha_metric_hessian` differentiates the α-entropy
  ``S_α(D + tA, D + uB)`` and yields the WYD metric ``wyd:α``.

Example:

    .. code-block:: python

        from monometric.entropy import hessian_metric
        from monometric.hermitian import random_density, random_tangent

        D = random_density(3, seed=1, floor=0.05)
        A = random_tangent(3, seed=2)
        hessian_metric("xlogx", D, A, A)  # Kubo-Mori value within 1e-4
"""

from dataclasses import dataclass
from typing import Callable, Dict, Optional, Tuple, Union

import numpy as np
import numpy.typing as npt
from scipy import linalg
from scipy.special import entr, rel_entr

from .errors import DimensionMismatchError, DomainError, StepTooLargeError
from .hermitian import DensityMatrix, HermitianMatrix, MatrixLike, as_matrix
from .types import ComplexArray, RealArray

__all__ = [
    "DEFAULT_STEP",
    "EntropyGenerator",
    "GENERATORS",
    "get_generator",
    "trace_function",
    "von_neumann_entropy",
    "hessian_metric",
    "relative_entropy",
    "classical_relative_entropy",
    "alpha_entropy",
    "alpha_metric_hessian",
]

DEFAULT_STEP = 1e-4
"""Default finite difference step"""


@dataclass(frozen=True)
class EntropyGenerator:
    """Pointwise function ``G`` whose trace functional ``Tr G(D)`` generates a metric

    Attributes:
        name (:obj:`str`): Identifier
        func (:obj:`typing.Callable`): Vectorized ``G`` on ``(0, ∞)``
        description (:obj:`str`): Human readable formula
    """

    name: str
    func: Callable[[RealArray], RealArray]
    description: str = ""


def _xlogx(t: RealArray) -> RealArray:
    return -entr(t)  # type: ignore[no-any-return]


def _square(t: RealArray) -> RealArray:
    return t * t


GENERATORS: Dict[str, EntropyGenerator] = {
    "xlogx": EntropyGenerator("xlogx", _xlogx, "t log t, the negative von Neumann entropy"),
    "square": EntropyGenerator("square", _square, "t^2"),
}
"""Named generators"""


def get_generator(generator: Union[str, EntropyGenerator]) -> EntropyGenerator:
    """Look up a generator by name

    Raises:
        DomainError: If the name is unknown
    """
    if isinstance(generator, EntropyGenerator):
        return generator
    try:
        return GENERATORS[generator]
    except KeyError:
        raise DomainError(f"Unknown generator '{generator}', known: {', '.join(sorted(GENERATORS))}") from None


def trace_function(generator: Union[str, EntropyGenerator], matrix: MatrixLike) -> float:
    """``Tr G(M) = Σ G(λ_i)`` over the eigenvalues of a Hermitian matrix"""
    values = linalg.eigvalsh(HermitianMatrix(matrix).entries)
    return float(np.sum(get_generator(generator).func(values)))


def von_neumann_entropy(density: DensityMatrix) -> float:
    """``S(D) = -Tr D log D``

    Args:
        density (:class:`monometric.hermitian.DensityMatrix`): The state

    Returns:
        :obj:`float`: Entropy in nats, in ``[0, log n]``
    """
    return float(np.sum(entr(density.eigenvalues)))


def _tangent_entries(density: DensityMatrix, tangent: Optional[MatrixLike], fallback: ComplexArray) -> ComplexArray:
    if tangent is None:
        return fallback
    entries = tangent.entries if isinstance(tangent, HermitianMatrix) else as_matrix(tangent)
    if entries.shape[0] != density.n:
        raise DimensionMismatchError(f"Tangent of dimension {entries.shape[0]} at a density of dimension {density.n}")
    return entries


def _shifted_spectra(
    density: DensityMatrix, a: ComplexArray, b: ComplexArray, step: float
) -> Dict[Tuple[int, int], RealArray]:
    if not step > 0:
        raise DomainError(f"Step must be positive, got {step}")
    spectra = {}
    for sa in (1, -1):
        for sb in (1, -1):
            values = linalg.eigvalsh(HermitianMatrix(density.entries + sa * step * a + sb * step * b).entries)
            if values[0] <= 0:
                raise StepTooLargeError(
                    f"Step {step} leaves the positive matrices, smallest eigenvalue {values[0]:.3e}"
                )
            spectra[(sa, sb)] = values
    return spectra


def _mixed_difference(values: Dict[Tuple[int, int], float], step: float) -> float:
    return (values[(1, 1)] - values[(1, -1)] - values[(-1, 1)] + values[(-1, -1)]) / (4.0 * step * step)


def hessian_metric(
    generator: Union[str, EntropyGenerator],
    density: DensityMatrix,
    a: MatrixLike,
    b: Optional[MatrixLike] = None,
    step: float = DEFAULT_STEP,
) -> float:
    """Mixed second derivative ``∂²/∂t∂s Tr G(D + tA + sB)`` at ``t = s = 0``

    Approximated by the central difference
    ``[F(h,h) - F(h,-h) - F(-h,h) + F(-h,-h)] / 4h²``.

    Args:
        generator (:obj:`str` | :class:`EntropyGenerator`): ``G`` or its name
        density (:class:`monometric.hermitian.DensityMatrix`): Base point ``D``
        a (:obj:`monometric.hermitian.MatrixLike`): Tangent ``A``
        b (:obj:`monometric.hermitian.MatrixLike`, optional): Tangent ``B``, defaults to ``A``
        step (:obj:`float`, optional): Step ``h``

    Returns:
        :obj:`float`: The Hessian value

    Raises:
        StepTooLargeError: If one of the four shifted matrices is not strictly positive
    """
    gen = get_generator(generator)
    a_entries = _tangent_entries(density, a, density.entries)
    b_entries = _tangent_entries(density, b, a_entries)
    spectra = _shifted_spectra(density, a_entries, b_entries, step)
    values = {shift: float(np.sum(gen.func(spectrum))) for shift, spectrum in spectra.items()}
    return _mixed_difference(values, step)


def _check_pair(d1: DensityMatrix, d2: DensityMatrix) -> None:
    if d1.n != d2.n:
        raise DimensionMismatchError(f"Densities of dimension {d1.n} and {d2.n}")


def relative_entropy(d1: DensityMatrix, d2: DensityMatrix) -> float:
    """Quantum relative entropy ``Tr D1 (log D1 - log D2)``

    Args:
        d1 (:class:`monometric.hermitian.DensityMatrix`): First state
        d2 (:class:`monometric.hermitian.DensityMatrix`): Second state

    Returns:
        :obj:`float`: The relative entropy, non negative up to rounding
    """
    _check_pair(d1, d2)
    own = -float(np.sum(entr(d1.eigenvalues)))
    cross = float(np.trace(d1.entries @ d2.log()).real)
    return own - cross


def _probability(values: npt.ArrayLike, name: str) -> RealArray:
    p = np.asarray(values, dtype=np.float64)
    if p.ndim != 1 or p.size == 0:
        raise DimensionMismatchError(f"{name} must be a non-empty vector, got shape {p.shape}")
    if not np.all(np.isfinite(p)) or np.any(p <= 0):
        raise DomainError(f"{name} must be strictly positive")
    if abs(float(np.sum(p)) - 1.0) > 1e-12:
        raise DomainError(f"{name} must sum to 1, got {float(np.sum(p))!r}")
    return p


def classical_relative_entropy(p: npt.ArrayLike, q: npt.ArrayLike) -> float:
    """Classical relative entropy ``Σ p_i log(p_i / q_i)``

    Args:
        p (:obj:`numpy.typing.ArrayLike`): Strictly positive probability vector
        q (:obj:`numpy.typing.ArrayLike`): Strictly positive probability vector

    Returns:
        :obj:`float`: The relative entropy
    """
    pv = _probability(p, "p")
    qv = _probability(q, "q")
    if pv.shape != qv.shape:
        raise DimensionMismatchError(f"Vectors of length {pv.size} and {qv.size}")
    return float(np.sum(rel_entr(pv, qv)))


def _alpha_trace(d1: DensityMatrix, d2: DensityMatrix, exponent: float) -> float:
    return float(np.trace(d2.power(exponent) @ d1.power(1.0 - exponent)).real)


def alpha_entropy(d1: DensityMatrix, d2: DensityMatrix, alpha: float) -> float:
    """α-entropy ``4/(1-α²)·(1 - Tr D2^q·D1^(1-q))``, ``q = (1+α)/2``

    The formula extends continuously to ``α = -1`` where it is the relative
    entropy of ``D1`` to ``D2``, and to ``α = 1`` where the arguments swap.

    Args:
        d1 (:class:`monometric.hermitian.DensityMatrix`): First state
        d2 (:class:`monometric.hermitian.DensityMatrix`): Second state
        alpha (:obj:`float`): Parameter in ``(-2, 2)``

    Returns:
        :obj:`float`: ``S_α(D1, D2)``

    Raises:
        DomainError: If ``alpha`` is outside ``(-2, 2)``
    """
    if not -2.0 < alpha < 2.0:
        raise DomainError(f"alpha must lie in (-2, 2), got {alpha}")
    _check_pair(d1, d2)
    if alpha == -1.0:
        return relative_entropy(d1, d2)
    if alpha == 1.0:
        return relative_entropy(d2, d1)
    q = (1.0 + alpha) / 2.0
    return 4.0 / (1.0 - alpha * alpha) * (1.0 - _alpha_trace(d1, d2, q))


def alpha_metric_hessian(
    density: DensityMatrix,
    a: MatrixLike,
    b: Optional[MatrixLike] = None,
    alpha: float = 0.0,
    step: float = DEFAULT_STEP,
) -> float:
    """Negated mixed derivative ``-∂²/∂t∂u S_α(D + tA, D + uB)`` at ``t = u = 0``

    The sign makes commuting tangents reproduce the Fisher value ``Σ a_i b_i / p_i``.

    Args:
        density (:class:`monometric.hermitian.DensityMatrix`): Base point ``D``
        a (:obj:`monometric.hermitian.MatrixLike`): Tangent ``A``
        b (:obj:`monometric.hermitian.MatrixLike`, optional): Tangent ``B``, defaults to ``A``
        alpha (:obj:`float`, optional): Parameter in ``(-2, 2)``
        step (:obj:`float`, optional): Step ``h``

    Returns:
        :obj:`float`: Approximation of the ``wyd:α`` metric

    Raises:
        StepTooLargeError: If ``D ± hA`` or ``D ± hB`` is not strictly positive
        DomainError: If ``alpha`` is outside ``(-2, 2)``
    """
    if not -2.0 < alpha < 2.0:
        raise DomainError(f"alpha must lie in (-2, 2), got {alpha}")
    a_entries = _tangent_entries(density, a, density.entries)
    b_entries = _tangent_entries(density, b, a_entries)
    if not step > 0:
        raise DomainError(f"Step must be positive, got {step}")

    def shifted(direction: ComplexArray, sign: int) -> DensityMatrix:
        entries = density.entries + sign * step * direction
        smallest = float(linalg.eigvalsh(HermitianMatrix(entries).entries)[0])
        if smallest <= 0:
            raise StepTooLargeError(f"Step {step} leaves the positive matrices, smallest eigenvalue {smallest:.3e}")
        return DensityMatrix(entries, floor=smallest / 2)

    firsts = {sign: shifted(a_entries, sign) for sign in (1, -1)}
    seconds = {sign: shifted(b_entries, sign) for sign in (1, -1)}
    values = {(sa, sb): alpha_entropy(firsts[sa], seconds[sb], alpha) for sa in (1, -1) for sb in (1, -1)}
    return -_mixed_difference(values, step)
