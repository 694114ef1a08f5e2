"""Catalog of operator monotone functions

Every monotone metric on densities corresponds to a symmetric operator
monotone function ``f`` on ``(0, ∞)`` with ``f(1) = 1``. The metric weights
the off-diagonal entries of a tangent in the eigenbasis of the base point with
the Morozova-Chentsov function ``c(x, y) = 1 / (y·f(x/y))``.

Catalog identifiers (stable, used on the command line):

=================  =========================================================  ===========
identifier         ``f(t)``                                                   ``f(0)``
=================  =========================================================  ===========
``sld``            ``(1 + t) / 2``                                            ``1/2``
``rld``            ``2t / (1 + t)``                                           ``0``
``km``             ``(t - 1) / log t``                                        ``0``
``sqrt:<α>``       ``2t^(α+1/2) / (1 + t^(2α))``, ``0 ≤ α ≤ 1/2``             ``0``
``km-geo``         ``(t - 1) / log t · 2√t / (1 + t)``                        ``0``
``km-sq``          ``((t - 1) / log t)² · 2 / (1 + t)``                       ``0``
``wyd:<α>``        ``β(1-β)(t-1)² / ((t^β - 1)(t^(1-β) - 1))``, ``β = (1-α)/2``  ``β(1-β)`` on ``0 < β < 1``
=================  =========================================================  ===========

``wyd:<α>`` accepts ``-3 < α < 3``, ``α = ±1`` is the Kubo-Mori function.

Example:

    .. code-block:: python

        from monometric.functions import eval_c, eval_f, parse_kind

        km = parse_kind("km")
        eval_f(km, 2.718281828459045)  # 1.718281828...
        eval_c(parse_kind("sld"), 0.75, 0.25)  # 2.0
"""

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Union, overload

import numpy as np
import numpy.typing as npt
from scipy.special import expit

from .errors import DomainError
from .hermitian import matrix_function
from .types import OperatorMonotoneReport, RealArray, Seed, SweepReport

__all__ = [
    "SERIES_THRESHOLD",
    "DEFAULT_KINDS",
    "KIND_NAMES",
    "MonotoneFunctionKind",
    "parse_kind",
    "format_parameter",
    "describe_kind",
    "eval_f",
    "series_f",
    "eval_c",
    "mc_matrix",
    "f_at_zero",
    "limit_gap",
    "check_symmetry",
    "check_bounds",
    "check_operator_monotone_sample",
    "catalog",
]

SERIES_THRESHOLD = 1e-6
"""Below this ``|t - 1|`` the removable singularity at ``t = 1`` is evaluated by a Taylor expansion"""

KIND_NAMES = ("sld", "rld", "km", "sqrt", "km-geo", "km-sq", "wyd")
"""Names of the function families"""

DEFAULT_KINDS = ["sld", "rld", "km", "sqrt:0", "sqrt:0.25", "km-geo", "km-sq", "wyd:0", "wyd:0.5", "wyd:-0.5"]
"""Catalog identifiers covered when no kind is requested explicitly"""

_FORMULAS: Dict[str, str] = {
    "sld": "(1 + t) / 2",
    "rld": "2t / (1 + t)",
    "km": "(t - 1) / log t",
    "sqrt": "2t^(a + 1/2) / (1 + t^(2a))",
    "km-geo": "(t - 1) / log t * 2 sqrt(t) / (1 + t)",
    "km-sq": "((t - 1) / log t)^2 * 2 / (1 + t)",
    "wyd": "b(1 - b)(t - 1)^2 / ((t^b - 1)(t^(1 - b) - 1)), b = (1 - a) / 2",
}

FloatOrArray = Union[float, RealArray]


def format_parameter(value: float) -> str:
    """Shortest text for a parameter that parses back to the same float

    Args:
        value (:obj:`float`): Parameter

    Returns:
        :obj:`str`: ``0`` for ``0.0``, ``0.5`` for ``0.5`` and so on
    """
    value = float(value) + 0.0  # normalizes -0.0
    if value.is_integer():
        return str(int(value))
    return repr(value)


@dataclass(frozen=True)
class MonotoneFunctionKind:
    """A catalog entry

    Use :func:`parse_kind` to build instances, it validates the parameter.

    Attributes:
        name (:obj:`str`): Family name, one of :data:`KIND_NAMES`
        parameter (:obj:`float`, optional): ``α`` for ``sqrt`` and ``wyd``
        f_at_zero (:obj:`float`): Analytic limit ``f(0+)``
    """

    name: str
    parameter: Optional[float] = None
    f_at_zero: float = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "f_at_zero", _analytic_f_at_zero(self.name, self.beta))

    @property
    def beta(self) -> Optional[float]:
        """:obj:`float`, optional: ``β = (1 - α) / 2`` for the ``wyd`` family"""
        if self.name == "wyd" and self.parameter is not None:
            return (1.0 - self.parameter) / 2.0
        return None

    @property
    def identifier(self) -> str:
        """:obj:`str`: Stable catalog identifier such as ``wyd:0.5``"""
        if self.parameter is None:
            return self.name
        return f"{self.name}:{format_parameter(self.parameter)}"

    def __str__(self) -> str:
        return self.identifier


def _analytic_f_at_zero(name: str, beta: Optional[float]) -> float:
    if name == "sld":
        return 0.5
    if name == "wyd" and beta is not None and 0.0 < beta < 1.0:
        return beta * (1.0 - beta)
    return 0.0


def parse_kind(identifier: Union[str, MonotoneFunctionKind]) -> MonotoneFunctionKind:
    """Parse a catalog identifier

    Args:
        identifier (:obj:`str`): One of ``sld``, ``rld``, ``km``, ``sqrt:<α>``,
            ``km-geo``, ``km-sq`` or ``wyd:<α>``

    Returns:
        :class:`MonotoneFunctionKind`: The catalog entry, ``wyd:1`` and ``wyd:-1`` are ``km``

    Raises:
        DomainError: If the identifier is unknown or the parameter is out of range
    """
    if isinstance(identifier, MonotoneFunctionKind):
        return identifier

    name, sep, raw = identifier.strip().lower().partition(":")
    if name not in KIND_NAMES:
        raise DomainError(f"Unknown function kind '{identifier}', known kinds: {', '.join(KIND_NAMES)}")

    if name not in ("sqrt", "wyd"):
        if sep:
            raise DomainError(f"Function kind '{name}' takes no parameter, got '{identifier}'")
        return MonotoneFunctionKind(name)

    if not sep or not raw:
        raise DomainError(f"Function kind '{name}' needs a parameter, e.g. '{name}:0.5'")
    try:
        alpha = float(raw)
    except ValueError as e:
        raise DomainError(f"Invalid parameter for '{name}': {raw!r}") from e
    if not math.isfinite(alpha):
        raise DomainError(f"Invalid parameter for '{name}': {raw!r}")

    if name == "sqrt":
        if not 0.0 <= alpha <= 0.5:
            raise DomainError(f"Parameter of 'sqrt' must lie in [0, 1/2], got {alpha}")
        return MonotoneFunctionKind("sqrt", alpha + 0.0)

    if not -3.0 < alpha < 3.0:
        raise DomainError(f"Parameter of 'wyd' must lie in (-3, 3), got {alpha}")
    if abs(alpha) == 1.0:
        return MonotoneFunctionKind("km")
    return MonotoneFunctionKind("wyd", alpha + 0.0)


def describe_kind(kind: Union[str, MonotoneFunctionKind]) -> Dict[str, object]:
    """Describe a catalog entry for listings

    Args:
        kind (:obj:`str` | :class:`MonotoneFunctionKind`): Catalog entry

    Returns:
        :obj:`dict`: ``identifier``, ``name``, ``parameter``, ``formula`` and ``f0``
    """
    kind = parse_kind(kind)
    return {
        "identifier": kind.identifier,
        "name": kind.name,
        "parameter": kind.parameter,
        "formula": _FORMULAS[kind.name],
        "f0": kind.f_at_zero,
    }


def _log_mean_ratio(t: RealArray, series: bool) -> RealArray:
    """``(t - 1) / log t``, with its expansion around ``t = 1``"""
    x = t - 1.0
    near = np.abs(x) < SERIES_THRESHOLD if series else np.zeros_like(t, dtype=bool)
    safe_x = np.where(near, 1.0, x)
    exact = safe_x / np.log1p(safe_x)
    expansion = 1.0 + x / 2.0 - x * x / 12.0
    return np.where(near, expansion, exact)  # type: ignore[no-any-return]


def _wyd(t: RealArray, beta: float, series: bool) -> RealArray:
    x = t - 1.0
    near = np.abs(x) < SERIES_THRESHOLD if series else np.zeros_like(t, dtype=bool)
    safe_t = np.where(near, 2.0, t)
    log_t = np.log(safe_t)
    exact = beta * (1.0 - beta) * (safe_t - 1.0) ** 2 / (np.expm1(beta * log_t) * np.expm1((1.0 - beta) * log_t))
    expansion = 1.0 + x / 2.0 - (beta * beta - beta + 1.0) / 12.0 * x * x
    return np.where(near, expansion, exact)  # type: ignore[no-any-return]


def _f(kind: MonotoneFunctionKind, t: RealArray, series: bool = True) -> RealArray:
    name = kind.name
    if name == "sld":
        return (1.0 + t) / 2.0  # type: ignore[no-any-return]
    if name == "rld":
        return 2.0 * t / (1.0 + t)  # type: ignore[no-any-return]
    if name == "km":
        return _log_mean_ratio(t, series)
    if name == "sqrt":
        alpha = float(kind.parameter or 0.0)
        return 2.0 * np.power(t, alpha + 0.5) / (1.0 + np.power(t, 2.0 * alpha))  # type: ignore[no-any-return]
    if name == "km-geo":
        return _log_mean_ratio(t, series) * 2.0 * np.sqrt(t) / (1.0 + t)  # type: ignore[no-any-return]
    if name == "km-sq":
        return _log_mean_ratio(t, series) ** 2 * 2.0 / (1.0 + t)  # type: ignore[no-any-return]
    if name == "wyd":
        assert kind.beta is not None
        return _wyd(t, kind.beta, series)
    raise DomainError(f"Unknown function kind '{name}'")


def _positive_array(t: npt.ArrayLike, what: str = "t") -> RealArray:
    array = np.asarray(t, dtype=np.float64)
    if not np.all(np.isfinite(array)) or np.any(array <= 0):
        raise DomainError(f"{what} must be positive and finite, got {t!r}")
    return array


@overload
def eval_f(kind: Union[str, MonotoneFunctionKind], t: float) -> float: ...


@overload
def eval_f(kind: Union[str, MonotoneFunctionKind], t: RealArray) -> RealArray: ...


def eval_f(kind: Union[str, MonotoneFunctionKind], t: FloatOrArray) -> FloatOrArray:
    """Evaluate ``f(t)``

    Removable singularities at ``t = 1`` are evaluated with an order two
    Taylor expansion when ``|t - 1| <`` :data:`SERIES_THRESHOLD`.

    Args:
        kind (:obj:`str` | :class:`MonotoneFunctionKind`): Catalog entry
        t (:obj:`float` | :obj:`numpy.ndarray`): Positive argument(s)

    Returns:
        :obj:`float` | :obj:`numpy.ndarray`: ``f(t)``, same shape as ``t``

    Raises:
        DomainError: If any ``t ≤ 0``
    """
    kind = parse_kind(kind)
    array = _positive_array(t)
    values = _f(kind, array)
    if np.ndim(t) == 0:
        return float(values)
    return values


def series_f(kind: Union[str, MonotoneFunctionKind], t: float) -> float:
    """Evaluate the Taylor expansion of ``f`` around ``t = 1``

    Exists for every kind, for the rational members it is just ``f``. Outside
    a small neighbourhood of ``t = 1`` the value is only an approximation.

    Args:
        kind (:obj:`str` | :class:`MonotoneFunctionKind`): Catalog entry
        t (:obj:`float`): Positive argument

    Returns:
        :obj:`float`: Expanded value
    """
    kind = parse_kind(kind)
    x = float(_positive_array(t)) - 1.0
    log_mean = 1.0 + x / 2.0 - x * x / 12.0
    if kind.name == "km":
        return log_mean
    if kind.name == "km-geo":
        return log_mean * 2.0 * math.sqrt(1.0 + x) / (2.0 + x)
    if kind.name == "km-sq":
        return log_mean**2 * 2.0 / (2.0 + x)
    if kind.name == "wyd":
        assert kind.beta is not None
        return 1.0 + x / 2.0 - (kind.beta**2 - kind.beta + 1.0) / 12.0 * x * x
    return eval_f(kind, 1.0 + x)


def eval_c(kind: Union[str, MonotoneFunctionKind], x: float, y: float) -> float:
    """Evaluate the Morozova-Chentsov function ``c(x, y) = 1 / (y·f(x/y))``

    Args:
        kind (:obj:`str` | :class:`MonotoneFunctionKind`): Catalog entry
        x (:obj:`float`): Positive argument
        y (:obj:`float`): Positive argument

    Returns:
        :obj:`float`: ``c(x, y)``

    Raises:
        DomainError: If ``x`` or ``y`` is not positive
    """
    xs = float(_positive_array(x, "x"))
    ys = float(_positive_array(y, "y"))
    return 1.0 / (ys * eval_f(kind, xs / ys))


def mc_matrix(kind: Union[str, MonotoneFunctionKind], eigenvalues: npt.ArrayLike) -> RealArray:
    """Matrix ``C_jk = c(p_j, p_k)`` of the Morozova-Chentsov function

    The result is symmetrized, its diagonal is ``1 / p_j`` exactly.

    Args:
        kind (:obj:`str` | :class:`MonotoneFunctionKind`): Catalog entry
        eigenvalues (:obj:`numpy.typing.ArrayLike`): Positive eigenvalues ``p``

    Returns:
        :obj:`numpy.ndarray`: Real symmetric ``n×n`` matrix
    """
    p = _positive_array(eigenvalues, "eigenvalues")
    ratios = p[:, None] / p[None, :]
    c = 1.0 / (p[None, :] * _f(parse_kind(kind), ratios))
    c = (c + c.T) / 2.0
    np.fill_diagonal(c, 1.0 / p)
    return c  # type: ignore[no-any-return]


def f_at_zero(kind: Union[str, MonotoneFunctionKind]) -> float:
    """Analytic limit ``f(0+)``

    Members with a vanishing limit report exactly ``0.0``.

    Args:
        kind (:obj:`str` | :class:`MonotoneFunctionKind`): Catalog entry

    Returns:
        :obj:`float`: ``f(0+)``
    """
    return parse_kind(kind).f_at_zero


def limit_gap(kind: Union[str, MonotoneFunctionKind], t: float) -> float:
    """Distance ``|f(t) - f(0+)|`` of a small argument from the analytic limit

    Args:
        kind (:obj:`str` | :class:`MonotoneFunctionKind`): Catalog entry
        t (:obj:`float`): Small positive argument

    Returns:
        :obj:`float`: The gap
    """
    kind = parse_kind(kind)
    return abs(eval_f(kind, t) - kind.f_at_zero)


def _log_uniform(samples: int, seed: Seed) -> RealArray:
    if samples < 1:
        raise DomainError(f"Need at least one sample, got {samples}")
    rng = np.random.default_rng(seed)
    return np.power(10.0, rng.uniform(-6.0, 6.0, samples))  # type: ignore[no-any-return]


def _sweep_report(kind: MonotoneFunctionKind, t: RealArray, scaled: RealArray, tolerance: float) -> SweepReport:
    worst_index = int(np.argmax(scaled))
    return SweepReport(
        kind=kind.identifier,
        samples=int(t.size),
        violations=int(np.count_nonzero(scaled > tolerance)),
        worst=max(0.0, float(scaled[worst_index])),
        worst_at=float(t[worst_index]),
    )


def check_symmetry(
    kind: Union[str, MonotoneFunctionKind], samples: int, seed: Seed, tolerance: float = 1e-10
) -> SweepReport:
    """Check ``f(t) = t·f(1/t)`` on log-uniform ``t`` in ``[1e-6, 1e6]``

    Args:
        kind (:obj:`str` | :class:`MonotoneFunctionKind`): Catalog entry
        samples (:obj:`int`): Number of points
        seed (:obj:`monometric.types.Seed`): Seed of the sweep
        tolerance (:obj:`float`, optional): Accepted ``|f(t) - t·f(1/t)| / max(1, f(t))``

    Returns:
        :obj:`monometric.types.SweepReport`: Violation count and the worst point
    """
    kind = parse_kind(kind)
    t = _log_uniform(samples, seed)
    f = _f(kind, t)
    mirrored = t * _f(kind, 1.0 / t)
    scaled = np.abs(f - mirrored) / np.maximum(1.0, f)
    return _sweep_report(kind, t, scaled, tolerance)


def check_bounds(
    kind: Union[str, MonotoneFunctionKind], samples: int, seed: Seed, tolerance: float = 1e-10
) -> SweepReport:
    """Check ``2t/(1+t) ≤ f(t) ≤ (1+t)/2`` on log-uniform ``t`` in ``[1e-6, 1e6]``

    Args:
        kind (:obj:`str` | :class:`MonotoneFunctionKind`): Catalog entry
        samples (:obj:`int`): Number of points
        seed (:obj:`monometric.types.Seed`): Seed of the sweep
        tolerance (:obj:`float`, optional): Slack relative to ``1 + t``

    Returns:
        :obj:`monometric.types.SweepReport`: Violation count and the worst point
    """
    kind = parse_kind(kind)
    t = _log_uniform(samples, seed)
    f = _f(kind, t)
    lower = 2.0 * t / (1.0 + t)
    upper = (1.0 + t) / 2.0
    scaled = np.maximum(lower - f, f - upper) / (1.0 + t)
    return _sweep_report(kind, t, scaled, tolerance)


def check_operator_monotone_sample(
    kind: Union[str, MonotoneFunctionKind], dim: int, trials: int, seed: Seed, tolerance: float = 1e-8
) -> OperatorMonotoneReport:
    """Sampled check that ``0 ≤ K ≤ H`` implies ``f(K) ≤ f(H)``

    Every trial draws ``H = GG† + I/10`` from a Ginibre ``G`` and
    ``K = H^(1/2)·R·H^(1/2)`` where ``R`` has its spectrum squashed into
    ``(0, 1)`` by the logistic function, so ``0 < K < H``.

    Args:
        kind (:obj:`str` | :class:`MonotoneFunctionKind`): Catalog entry
        dim (:obj:`int`): Matrix dimension in ``[2, 6]``
        trials (:obj:`int`): Number of trials
        seed (:obj:`monometric.types.Seed`): Seed of the trials
        tolerance (:obj:`float`, optional): Accepted negative eigenvalue of ``f(H) - f(K)``

    Returns:
        :obj:`monometric.types.OperatorMonotoneReport`: Violation count and smallest eigenvalue seen

    Raises:
        DomainError: If ``dim`` is outside ``[2, 6]``
    """
    kind = parse_kind(kind)
    if not 2 <= dim <= 6:
        raise DomainError(f"Dimension must lie in [2, 6], got {dim}")
    if trials < 1:
        raise DomainError(f"Need at least one trial, got {trials}")

    def f(values: RealArray) -> RealArray:
        return _f(kind, np.maximum(values, np.finfo(float).tiny))

    rng = np.random.default_rng(seed)
    violations = 0
    worst = math.inf
    for _ in range(trials):
        g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        h = g @ g.conj().T + 0.1 * np.eye(dim)
        s = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        r = matrix_function((s + s.conj().T) / 2, expit)
        root = matrix_function(h, np.sqrt)
        k = root @ r @ root

        difference = matrix_function(h, f) - matrix_function(k, f)
        smallest = float(np.linalg.eigvalsh((difference + difference.conj().T) / 2)[0])
        worst = min(worst, smallest)
        if smallest < -tolerance:
            violations += 1

    return OperatorMonotoneReport(
        kind=kind.identifier, dim=dim, trials=trials, violations=violations, worst_eigenvalue=worst
    )


def catalog(parameters: Optional[List[str]] = None) -> List[MonotoneFunctionKind]:
    """Parse a list of identifiers, defaulting to :data:`DEFAULT_KINDS`"""
    return [parse_kind(identifier) for identifier in (parameters or DEFAULT_KINDS)]

