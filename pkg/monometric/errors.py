"""Exceptions raised by the library

All of them derive from :class:`MonometricError`, which itself is a
:class:`ValueError`, so callers that only care about bad input can catch
either.
"""

__all__ = [
    "MonometricError",
    "NotHermitianError",
    "TraceMismatchError",
    "NotStrictlyPositiveError",
    "DimensionMismatchError",
    "DomainError",
    "NumericalFailureError",
    "StepTooLargeError",
    "DegenerateSpectrumError",
    "NotUnitaryError",
    "NotColumnStochasticError",
    "ChannelError",
    "MatrixFormatError",
    "ConfigError",
    "SkipTrial",
    "UsageError",
]


class MonometricError(ValueError):
    """Base class of all library errors"""


class NotHermitianError(MonometricError):
    """A matrix is not Hermitian within tolerance"""


class TraceMismatchError(MonometricError):
    """A density does not have trace one or a tangent is not traceless"""


class NotStrictlyPositiveError(MonometricError):
    """The smallest eigenvalue of a density is below the configured floor"""


class DimensionMismatchError(MonometricError):
    """Shapes of the arguments do not fit together"""


class DomainError(MonometricError):
    """An argument lies outside the domain of the operation"""


class NumericalFailureError(MonometricError):
    """An eigensolver, a reconstruction check or a quadrature did not converge"""


class StepTooLargeError(MonometricError):
    """A finite difference step leaves the strictly positive matrices"""


class DegenerateSpectrumError(MonometricError):
    """Eigenvalues that must be separated are not"""


class NotUnitaryError(MonometricError):
    """A matrix expected to be unitary is not"""


class NotColumnStochasticError(MonometricError):
    """A matrix has negative entries or its columns do not sum to one"""


class ChannelError(MonometricError):
    """Kraus operators are not trace preserving or a partition is invalid"""


class MatrixFormatError(MonometricError):
    """A matrix or channel document could not be parsed"""


class ConfigError(MonometricError):
    """A configuration value is invalid"""


class SkipTrial(MonometricError):
    """Raised inside a check when the trial cannot be evaluated

    This is not a failure. Fuzz suites count it separately.
    """


class UsageError(MonometricError):
    """The command line is malformed: unknown command, missing argument or unparsable value"""
