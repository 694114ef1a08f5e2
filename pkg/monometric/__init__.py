from .bloch import (
    StokesVector,
    bloch_profile,
    check_crosscheck,
    crosscheck_bloch,
    density_from_stokes,
    line_element,
    rotation_unitary,
    tangential_limit,
)
from .boundary import (
    LIFT_TO_BLOCH_SCALE,
    BoundarySequence,
    HorizontalVector,
    PureState,
    fubini_study,
    horizontal_lift,
    lifted_inner,
    radial_extension_limit,
    radial_projection,
)
from .channels import (
    KrausChannel,
    apply,
    check_contraction,
    check_schwarz,
    check_unitary_invariance,
    classical_stochastic,
    dump_channel,
    load_channel,
    merge_outcomes,
    pinching,
    random_channel,
)
from .classical import (
    embed_diagonal,
    embed_tangent,
    fisher_form,
    geodesic_distance,
    hellinger,
    sphere_coordinates,
    sphere_tangent,
)
from .config import BaseConfig, Bool, Float, Int, ListFloat, ListInt, ListString, RunConfig, String, Tolerances
from .entropy import (
    alpha_entropy,
    alpha_metric_hessian,
    classical_relative_entropy,
    hessian_metric,
    relative_entropy,
    von_neumann_entropy,
)
from .errors import (
    ChannelError,
    ConfigError,
    DegenerateSpectrumError,
    DimensionMismatchError,
    DomainError,
    MatrixFormatError,
    MonometricError,
    NotColumnStochasticError,
    NotHermitianError,
    NotStrictlyPositiveError,
    NotUnitaryError,
    NumericalFailureError,
    SkipTrial,
    StepTooLargeError,
    TraceMismatchError,
    UsageError,
)
from .functions import (
    DEFAULT_KINDS,
    MonotoneFunctionKind,
    catalog,
    check_bounds,
    check_operator_monotone_sample,
    check_symmetry,
    eval_c,
    eval_f,
    f_at_zero,
    parse_kind,
)
from .fuzz import run_suite
from .hermitian import (
    DensityMatrix,
    HermitianMatrix,
    TangentVector,
    dump_matrix,
    load_matrix,
    random_density,
    random_tangent,
    random_unitary,
    spectral_decompose,
    validate_density,
)
from .info import NAME, __version__
from .logging import LOGGER, log
from .metric import (
    commutator_form,
    decompose_tangent,
    mc_function_from_pair,
    metric_km_quadrature,
    metric_rld,
    metric_sld,
    metric_value,
    solve_lyapunov,
)
from .threading import TrialWorker, run_trials
from .types import Direction, ExitCode, LogLevel, Suite

__all__ = [
    "BaseConfig",
    "Bool",
    "BoundarySequence",
    "ChannelError",
    "ConfigError",
    "DEFAULT_KINDS",
    "DegenerateSpectrumError",
    "DensityMatrix",
    "DimensionMismatchError",
    "Direction",
    "DomainError",
    "ExitCode",
    "Float",
    "HermitianMatrix",
    "HorizontalVector",
    "Int",
    "KrausChannel",
    "LIFT_TO_BLOCH_SCALE",
    "LOGGER",
    "ListFloat",
    "ListInt",
    "ListString",
    "LogLevel",
    "MatrixFormatError",
    "MonometricError",
    "MonotoneFunctionKind",
    "NAME",
    "NotColumnStochasticError",
    "NotHermitianError",
    "NotStrictlyPositiveError",
    "NotUnitaryError",
    "NumericalFailureError",
    "PureState",
    "RunConfig",
    "SkipTrial",
    "StepTooLargeError",
    "StokesVector",
    "String",
    "Suite",
    "TangentVector",
    "Tolerances",
    "TraceMismatchError",
    "TrialWorker",
    "UsageError",
    "__version__",
    "alpha_entropy",
    "alpha_metric_hessian",
    "apply",
    "bloch_profile",
    "catalog",
    "check_bounds",
    "check_contraction",
    "check_crosscheck",
    "check_operator_monotone_sample",
    "check_schwarz",
    "check_symmetry",
    "check_unitary_invariance",
    "classical_relative_entropy",
    "classical_stochastic",
    "commutator_form",
    "crosscheck_bloch",
    "decompose_tangent",
    "density_from_stokes",
    "dump_channel",
    "dump_matrix",
    "embed_diagonal",
    "embed_tangent",
    "eval_c",
    "eval_f",
    "f_at_zero",
    "fisher_form",
    "fubini_study",
    "geodesic_distance",
    "hellinger",
    "hessian_metric",
    "horizontal_lift",
    "lifted_inner",
    "line_element",
    "load_channel",
    "load_matrix",
    "log",
    "mc_function_from_pair",
    "merge_outcomes",
    "metric_km_quadrature",
    "metric_rld",
    "metric_sld",
    "metric_value",
    "parse_kind",
    "pinching",
    "radial_extension_limit",
    "radial_projection",
    "random_channel",
    "random_density",
    "random_tangent",
    "random_unitary",
    "relative_entropy",
    "rotation_unitary",
    "run_suite",
    "run_trials",
    "solve_lyapunov",
    "spectral_decompose",
    "sphere_coordinates",
    "sphere_tangent",
    "tangential_limit",
    "validate_density",
    "von_neumann_entropy",
]
