"""Seeded property fuzz suites

Every suite draws random inputs per trial, checks an inequality that must
hold for all of them and aggregates the outcomes into a
:obj:`monometric.types.FuzzReport`:

============  ================================================================
suite         checked property
============  ================================================================
monotone      ``K_T(D)(T(A), T(A)) ≤ K_D(A, A)`` for random channels, every kind
schwarz       ``T(K)·T(D)⁻¹·T(K)† ≤ T(K·D⁻¹·K†)`` for random channels
ordering      ``SLD ≤ K ≤ RLD`` at random points, every kind
classical     Fisher form contraction under random column-stochastic maps
entropy       relative entropy contraction, quantum and classical
============  ================================================================

Reports only depend on the configuration: trial ``i`` seeds its random
streams with ``[seed, i, stream]`` and outcomes are aggregated in trial order.

Example:

    .. code-block:: python

        from monometric.config import RunConfig
        from monometric.fuzz import run_suite

        report = run_suite("ordering", RunConfig(seed=7, trials=20))
        report["failures"]  # 0
"""

from dataclasses import dataclass
from typing import Callable, Dict, List, Union

import numpy as np

from .channels import check_contraction, check_schwarz, classical_stochastic, merge_outcomes, random_channel
from .classical import fisher_form
from .config import RunConfig
from .entropy import classical_relative_entropy, relative_entropy
from .errors import NotStrictlyPositiveError, SkipTrial
from .functions import MonotoneFunctionKind, parse_kind
from .hermitian import DensityMatrix, random_density, random_tangent
from .info import __version__
from .logging import LOGGER, log
from .metric import metric_value
from .threading import run_trials, trial_seed
from .types import FuzzReport, LogLevel, RealArray, Suite

__all__ = ["Outcome", "SUITES", "run_suite", "TRACE_PRESERVATION_TOLERANCE"]

TRACE_PRESERVATION_TOLERANCE = 1e-12
"""Accepted deviation of ``Tr T(D)`` from 1"""

_MAX_ENV_DIM = 3


@dataclass(frozen=True)
class Outcome:
    """Result of a single check

    Attributes:
        label (:obj:`str`): What was checked, a catalog identifier or a property name
        status (:obj:`str`): ``pass``, ``fail`` or ``skip``
        margin (:obj:`float`): Relative slack, negative when the property is violated
        detail (:obj:`str`): Human readable values for failure messages
    """

    label: str
    status: str
    margin: float = 0.0
    detail: str = ""


def _skip(label: str, reason: str) -> Outcome:
    return Outcome(label, "skip", detail=reason)


def _relative_margin(before: float, after: float) -> float:
    return (before - after) / before if before > 0 else before - after


def _dimension(config: RunConfig, index: int) -> int:
    dims: List[int] = config.dims
    return dims[index % len(dims)]


def _rng(config: RunConfig, index: int, stream: int) -> np.random.Generator:
    return np.random.default_rng(trial_seed(config.seed, index, stream))


def _kinds(config: RunConfig) -> List[MonotoneFunctionKind]:
    return [parse_kind(kind) for kind in config.kinds]


def _monotone_trial(config: RunConfig, index: int) -> List[Outcome]:
    n = _dimension(config, index)
    env_dim = int(_rng(config, index, 3).integers(1, _MAX_ENV_DIM + 1))
    density = random_density(n, trial_seed(config.seed, index, 0), floor=config.density_floor)
    tangent = random_tangent(n, trial_seed(config.seed, index, 1))
    channel = random_channel(n, env_dim, trial_seed(config.seed, index, 2))

    outcomes = []
    output = channel.act(density)
    trace_error = abs(float(np.trace(output).real) - 1.0)
    hermitian_error = float(np.max(np.abs(output - output.conj().T)))
    status = "pass" if max(trace_error, hermitian_error) <= TRACE_PRESERVATION_TOLERANCE else "fail"
    outcomes.append(Outcome("trace", status, detail=f"trace error {trace_error:.3e}, asymmetry {hermitian_error:.3e}"))

    for kind in _kinds(config):
        try:
            report = check_contraction(kind, channel, density, tangent, config.tolerances)
        except SkipTrial as e:
            outcomes.append(_skip(kind.identifier, str(e)))
            continue
        outcomes.append(
            Outcome(
                kind.identifier,
                "pass" if report["passed"] else "fail",
                report["margin"],
                f"n={n} env={env_dim} before={report['value_before']!r} after={report['value_after']!r}",
            )
        )
    return outcomes


def _schwarz_trial(config: RunConfig, index: int) -> List[Outcome]:
    n = _dimension(config, index)
    rng = _rng(config, index, 3)
    env_dim = int(rng.integers(1, _MAX_ENV_DIM + 1))
    density = random_density(n, trial_seed(config.seed, index, 0), floor=config.density_floor)
    channel = random_channel(n, env_dim, trial_seed(config.seed, index, 2))
    operator = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    try:
        report = check_schwarz(channel, density, operator, config.tolerances)
    except SkipTrial as e:
        return [_skip("schwarz", str(e))]
    scale = report["tolerance"] / config.tolerances.schwarz
    return [
        Outcome(
            "schwarz",
            "pass" if report["passed"] else "fail",
            report["min_eigenvalue"] / scale,
            f"n={n} env={env_dim} min eigenvalue={report['min_eigenvalue']!r}",
        )
    ]


def _ordering_trial(config: RunConfig, index: int) -> List[Outcome]:
    n = _dimension(config, index)
    density = random_density(n, trial_seed(config.seed, index, 0), floor=config.density_floor)
    tangent = random_tangent(n, trial_seed(config.seed, index, 1))
    smallest = metric_value("sld", density, tangent)
    largest = metric_value("rld", density, tangent)
    slack = config.tolerances.ordering_rel

    outcomes = []
    for kind in _kinds(config):
        value = metric_value(kind, density, tangent)
        margin = min(_relative_margin(value, smallest), _relative_margin(largest, value))
        passed = smallest * (1.0 - slack) <= value <= largest * (1.0 + slack)
        outcomes.append(
            Outcome(
                kind.identifier,
                "pass" if passed else "fail",
                margin,
                f"n={n} sld={smallest!r} value={value!r} rld={largest!r}",
            )
        )
    return outcomes


def _stochastic_matrix(rng: np.random.Generator, n: int) -> RealArray:
    if n > 2 and rng.random() < 0.25:
        first, second = rng.choice(n, size=2, replace=False)
        return merge_outcomes(n, int(first), int(second))
    matrix = rng.random((n, n)) + 1e-3
    return matrix / matrix.sum(axis=0)  # type: ignore[no-any-return]


def _simplex_point(rng: np.random.Generator, n: int) -> RealArray:
    p = rng.dirichlet(np.ones(n))
    return p / p.sum()  # type: ignore[no-any-return]


def _classical_trial(config: RunConfig, index: int) -> List[Outcome]:
    n = _dimension(config, index)
    rng = _rng(config, index, 0)
    p = _simplex_point(rng, n)
    u = rng.standard_normal(n)
    u -= u.mean()
    channel = classical_stochastic(_stochastic_matrix(rng, n))
    mapped_p = np.diag(channel.act(np.diag(p))).real
    mapped_u = np.diag(channel.act(np.diag(u))).real

    before = fisher_form(p, u, u)
    after = fisher_form(mapped_p / mapped_p.sum(), mapped_u, mapped_u)
    tolerances = config.tolerances
    passed = after <= before * (1.0 + tolerances.contraction_rel) + tolerances.contraction_abs
    return [
        Outcome(
            "fisher",
            "pass" if passed else "fail",
            _relative_margin(before, after),
            f"n={n} before={before!r} after={after!r}",
        )
    ]


def _entropy_trial(config: RunConfig, index: int) -> List[Outcome]:
    n = _dimension(config, index)
    rng = _rng(config, index, 3)
    slack = config.tolerances.entropy_abs
    outcomes = []

    first = random_density(n, trial_seed(config.seed, index, 0), floor=config.density_floor)
    second = random_density(n, trial_seed(config.seed, index, 1), floor=config.density_floor)
    channel = random_channel(n, int(rng.integers(1, _MAX_ENV_DIM + 1)), trial_seed(config.seed, index, 2))
    try:
        mapped_first = DensityMatrix(channel.act(first), floor=config.tolerances.output_floor)
        mapped_second = DensityMatrix(channel.act(second), floor=config.tolerances.output_floor)
    except NotStrictlyPositiveError as e:
        outcomes.append(_skip("relative-entropy", str(e)))
    else:
        before = relative_entropy(first, second)
        after = relative_entropy(mapped_first, mapped_second)
        outcomes.append(
            Outcome(
                "relative-entropy",
                "pass" if after <= before + slack else "fail",
                _relative_margin(before, after),
                f"n={n} before={before!r} after={after!r}",
            )
        )

    p, q = _simplex_point(rng, n), _simplex_point(rng, n)
    pi = _stochastic_matrix(rng, n)
    mapped_p, mapped_q = pi @ p, pi @ q
    before = classical_relative_entropy(p, q)
    after = classical_relative_entropy(mapped_p / mapped_p.sum(), mapped_q / mapped_q.sum())
    outcomes.append(
        Outcome(
            "classical-relative-entropy",
            "pass" if after <= before + slack else "fail",
            _relative_margin(before, after),
            f"n={n} before={before!r} after={after!r}",
        )
    )
    return outcomes


SUITES: Dict[Suite, Callable[[RunConfig, int], List[Outcome]]] = {
    Suite.MONOTONE: _monotone_trial,
    Suite.SCHWARZ: _schwarz_trial,
    Suite.ORDERING: _ordering_trial,
    Suite.CLASSICAL: _classical_trial,
    Suite.ENTROPY: _entropy_trial,
}
"""Trial function of every suite"""

_KIND_SUITES = (Suite.MONOTONE, Suite.ORDERING)


def run_suite(suite: Union[str, Suite], config: RunConfig) -> FuzzReport:
    """Run a fuzz suite

    Args:
        suite (:obj:`str` | :class:`monometric.types.Suite`): Suite name
        config (:class:`monometric.config.RunConfig`): Seed, trial count, dimensions, kinds and tolerances

    Returns:
        :obj:`monometric.types.FuzzReport`: Aggregated outcomes, identical for identical configurations
    """
    suite = Suite(suite)
    trial = SUITES[suite]
    results = run_trials(lambda index: trial(config, index), config.trials, config.workers)

    passes = failures = skips = 0
    margins = []
    for index, outcomes in enumerate(results):
        for outcome in outcomes:
            if outcome.status == "skip":
                skips += 1
                LOGGER.debug("%s trial %d skipped %s: %s", suite.value, index, outcome.label, outcome.detail)
                continue
            margins.append(outcome.margin)
            if outcome.status == "pass":
                passes += 1
            else:
                failures += 1
                log(
                    "trial %d violated by %s (%s)",
                    index,
                    outcome.label,
                    outcome.detail,
                    level=LogLevel.WARNING,
                    prefix=suite.value,
                )

    log(
        "%d checks, %d passed, %d failed, %d skipped",
        passes + failures + skips,
        passes,
        failures,
        skips,
        prefix=suite.value,
    )
    return FuzzReport(
        suite=suite.value,
        seed=config.seed,
        trials=config.trials,
        passes=passes,
        failures=failures,
        skips=skips,
        worst_margin=min(margins) if margins else 0.0,
        kinds=[kind.identifier for kind in _kinds(config)] if suite in _KIND_SUITES else [],
        dims=list(config.dims),
        tolerances={name: float(value) for name, value in config.tolerances.model_settings().items()},
        version=__version__,
    )
