"""This module contains the shared types of the package: array aliases, enums
for the command surface and the typed dicts every check and report returns.

Reports are plain :class:`typing.TypedDict` objects so that they can be dumped
to JSON by the command line interface without any conversion.
"""

from __future__ import annotations

import logging
from enum import Enum, IntEnum
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, TypedDict, Union

import numpy as np
import numpy.typing as npt

__all__ = [
    "ComplexArray",
    "RealArray",
    "Seed",
    "LogLevel",
    "ExitCode",
    "Suite",
    "Direction",
    "SettingType",
    "Settings",
    "SweepReport",
    "OperatorMonotoneReport",
    "ContractionReport",
    "SchwarzReport",
    "InvarianceReport",
    "CommutatorReport",
    "CrosscheckReport",
    "TangentialLimit",
    "LimitReport",
    "FuzzReport",
    "MetricRecord",
    "ProfileRow",
    "CommandCallback",
    "Command",
    "Commands",
]

# === ARRAYS ===

ComplexArray = npt.NDArray[np.complex128]
"""Dense complex matrix or vector"""

RealArray = npt.NDArray[np.float64]
"""Dense real matrix or vector"""

Seed = Union[int, Sequence[int]]
"""Seed accepted by :func:`numpy.random.default_rng`. Integer lists are used to derive per-trial streams."""


# === COMMAND LINE ===


class LogLevel(int, Enum):
    """Log levels for :func:`monometric.log`

    Attributes:
        DEBUG: Diagnostic output, shown with ``--verbose``
        INFO: Progress messages
        WARNING: Property violations and skipped work
        ERROR: Usage and input errors
    """

    DEBUG = logging.DEBUG
    INFO = logging.INFO
    WARNING = logging.WARNING
    ERROR = logging.ERROR


class ExitCode(IntEnum):
    """Exit codes of the command line interface

    Attributes:
        OK: Every checked property held
        VIOLATION: At least one property violation
        USAGE: Usage or input error
    """

    OK = 0
    VIOLATION = 1
    USAGE = 2


class Suite(str, Enum):
    """Property suites run by ``fuzz``

    Attributes:
        MONOTONE: Metric contraction under random channels
        SCHWARZ: Operator Schwarz inequality for random channels
        ORDERING: SLD below every kind below RLD
        CLASSICAL: Fisher form contraction under column-stochastic maps
        ENTROPY: Relative entropy contraction, quantum and classical
    """

    MONOTONE = "monotone"
    SCHWARZ = "schwarz"
    ORDERING = "ordering"
    CLASSICAL = "classical"
    ENTROPY = "entropy"


class Direction(str, Enum):
    """Tangent directions at a point of the Bloch ball

    Attributes:
        RADIAL: Along the radius
        TANGENTIAL: Orthogonal to the radius
    """

    RADIAL = "radial"
    TANGENTIAL = "tangential"


# === SETTINGS ===


class SettingType(str, Enum):
    """Configuration field types

    Attributes:
        INT: Integer, accepts minimum and maximum
        FLOAT: Float, accepts minimum and maximum
        BOOL: Boolean flag
        STR: Any string
        LIST_INT: List of integers, every item within minimum and maximum
        LIST_FLOAT: List of floats, every item within minimum and maximum
        LIST_STRING: List of strings
    """

    INT = "int"
    FLOAT = "float"
    BOOL = "bool"
    STR = "str"
    LIST_INT = "list int"
    LIST_FLOAT = "list float"
    LIST_STRING = "list string"


Settings = Dict[str, Any]
"""Dictionary of settings with their names as keys and their values as values."""


# === REPORTS ===


class SweepReport(TypedDict):
    """Result of a sampled sweep over ``t`` (symmetry or extremality bounds)

    Attributes:
        kind (:obj:`str`): Catalog identifier
        samples (:obj:`int`): Number of sampled points
        violations (:obj:`int`): Number of points outside tolerance
        worst (:obj:`float`): Largest violation, scaled by the tolerance denominator
        worst_at (:obj:`float`): Point of the worst violation
    """

    kind: str
    samples: int
    violations: int
    worst: float
    worst_at: float


class OperatorMonotoneReport(TypedDict):
    """Result of the sampled operator monotonicity check

    Attributes:
        kind (:obj:`str`): Catalog identifier
        dim (:obj:`int`): Matrix dimension
        trials (:obj:`int`): Number of trials
        violations (:obj:`int`): Trials with ``λ_min(f(H) - f(K))`` below tolerance
        worst_eigenvalue (:obj:`float`): Smallest eigenvalue seen over all trials
    """

    kind: str
    dim: int
    trials: int
    violations: int
    worst_eigenvalue: float


class ContractionReport(TypedDict):
    """Metric before and after a channel

    Attributes:
        kind (:obj:`str`): Catalog identifier
        value_before (:obj:`float`): ``K_D(A, A)``
        value_after (:obj:`float`): ``K_T(D)(T(A), T(A))``
        margin (:obj:`float`): Relative slack ``(before - after) / before``
        passed (:obj:`bool`): Whether ``after <= before * (1 + rel) + abs``
        floor_mixed (:obj:`bool`): Whether the output density was mixed with the maximally mixed state
    """

    kind: str
    value_before: float
    value_after: float
    margin: float
    passed: bool
    floor_mixed: bool


class SchwarzReport(TypedDict):
    """Operator Schwarz inequality check

    Attributes:
        min_eigenvalue (:obj:`float`): Smallest eigenvalue of ``T(K D^-1 K*) - T(K) T(D)^-1 T(K)*``
        tolerance (:obj:`float`): Effective (scaled) tolerance
        passed (:obj:`bool`): Whether the smallest eigenvalue is above ``-tolerance``
    """

    min_eigenvalue: float
    tolerance: float
    passed: bool


class InvarianceReport(TypedDict):
    """Unitary invariance check

    Attributes:
        kind (:obj:`str`): Catalog identifier
        value (:obj:`float`): Metric at the original point
        rotated_value (:obj:`float`): Metric at the conjugated point
        difference (:obj:`float`): Absolute difference
        passed (:obj:`bool`): Whether the difference is within tolerance
    """

    kind: str
    value: float
    rotated_value: float
    difference: float
    passed: bool


class CommutatorReport(TypedDict):
    """Metric on commutator tangents compared with the raw trace expression

    Attributes:
        alpha (:obj:`float`): WYD parameter
        metric_value (:obj:`float`): ``K^α_D(i[D,X], i[D,X])``
        raw_trace (:obj:`float`): ``Tr([D^β, X][D^(1-β), X])``
        ratio (:obj:`float`, optional): ``metric_value / raw_trace`` or None if the trace vanishes
        expected_ratio (:obj:`float`): ``-4 / (1 - α²)``
    """

    alpha: float
    metric_value: float
    raw_trace: float
    ratio: Optional[float]
    expected_ratio: float


class CrosscheckReport(TypedDict):
    """Bloch ball coefficient by the general evaluator against its closed form

    Attributes:
        kind (:obj:`str`): Catalog identifier
        r (:obj:`float`): Radius
        direction (:obj:`str`): ``radial`` or ``tangential``
        general (:obj:`float`): Value of the eigenbasis evaluator
        formula (:obj:`float`): Closed form value
        passed (:obj:`bool`): Whether the relative difference is within tolerance
    """

    kind: str
    r: float
    direction: str
    general: float
    formula: float
    passed: bool


class TangentialLimit(TypedDict):
    """Limit of the tangential Bloch coefficient at the sphere

    Attributes:
        kind (:obj:`str`): Catalog identifier
        f0 (:obj:`float`): ``f(0)``
        limit (:obj:`float`, optional): ``1 / (2 f(0))`` or None if divergent
        divergent (:obj:`bool`): Whether the coefficient diverges
        samples (:obj:`list`): ``[r, coefficient]`` pairs at ``r = 1 - 10^-k``
    """

    kind: str
    f0: float
    limit: Optional[float]
    divergent: bool
    samples: List[Tuple[float, float]]


class LimitReport(TypedDict):
    """Radial extension of a metric to the pure states along a boundary sequence

    Attributes:
        kind (:obj:`str`): Catalog identifier
        f0 (:obj:`float`): ``f(0)``
        fubini_study (:obj:`float`): ``h(u, v)``
        limit (:obj:`float`, optional): ``h(u, v) / f(0)`` or None if divergent
        divergent (:obj:`bool`): Whether the radial extension does not exist
        values (:obj:`list` of :obj:`float`): Lifted inner products along the grid
        errors (:obj:`list` of :obj:`float`): Relative errors against the limit (empty if divergent)
        final_error (:obj:`float`, optional): Last error on the grid
        monotone (:obj:`bool`): Errors decrease (or, if divergent, values increase) along the grid
        converged (:obj:`bool`): Monotone and the final error is within tolerance
        exceeds_threshold (:obj:`bool`): Divergent and the last value exceeds ``10^3 |h(u, v)|``
    """

    kind: str
    f0: float
    fubini_study: float
    limit: Optional[float]
    divergent: bool
    values: List[float]
    errors: List[float]
    final_error: Optional[float]
    monotone: bool
    converged: bool
    exceeds_threshold: bool


class FuzzReport(TypedDict):
    """Aggregated result of a fuzz suite

    Attributes:
        suite (:obj:`str`): Suite name
        seed (:obj:`int`): Base seed
        trials (:obj:`int`): Number of trials, a trial may run several checks
        passes (:obj:`int`): Checks that held
        failures (:obj:`int`): Checks that were violated
        skips (:obj:`int`): Checks skipped because an output density was too singular
        worst_margin (:obj:`float`): Smallest relative margin seen
        kinds (:obj:`list` of :obj:`str`): Catalog identifiers covered
        dims (:obj:`list` of :obj:`int`): Dimensions covered
        tolerances (:obj:`dict`): Tolerances in effect
        version (:obj:`str`): Package version
    """

    suite: str
    seed: int
    trials: int
    passes: int
    failures: int
    skips: int
    worst_margin: float
    kinds: List[str]
    dims: List[int]
    tolerances: Dict[str, float]
    version: str


class MetricRecord(TypedDict):
    """Output of ``metric eval``

    Attributes:
        kind (:obj:`str`): Catalog identifier
        value (:obj:`float`): ``K_D(A, B)`` for the requested kind
        sld (:obj:`float`): Smallest monotone metric value
        rld (:obj:`float`): Largest monotone metric value
    """

    kind: str
    value: float
    sld: float
    rld: float


class ProfileRow(TypedDict):
    """Row of the Bloch profile

    Attributes:
        r (:obj:`float`): Radius
        kind (:obj:`str`): Catalog identifier
        radial (:obj:`float`): Radial coefficient
        tangential (:obj:`float`): Tangential coefficient
    """

    r: float
    kind: str
    radial: float
    tangential: float


CommandCallback = Callable[[List[str]], ExitCode]
"""Registered command, called with the raw argument list after the command name"""


class Command(TypedDict):
    """A command line command

    Attributes:
        name (:obj:`str`): Command name, may consist of several words such as ``omf list``
        callback (:obj:`CommandCallback`): Wrapper parsing the arguments and calling the implementation
        description (:obj:`str`): Description shown by ``help``
        parameters (:obj:`list` of :obj:`str`): Positional parameters, ``<required>`` or ``[optional]``
        flags (:obj:`list` of :obj:`str`): Accepted ``--flag`` names
    """

    name: str
    callback: CommandCallback
    description: str
    parameters: List[str]
    flags: List[str]


Commands = Dict[str, Command]
"""Registered commands by name"""
