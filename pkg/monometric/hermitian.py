"""Hermitian matrix primitives

This module provides the validated matrix types everything else is built on:
:class:`HermitianMatrix`, :class:`DensityMatrix` (strictly positive, trace one)
and :class:`TangentVector` (traceless), together with the spectral
decomposition, spectral calculus, seeded random generation and the JSON
matrix format.

All matrix types are immutable. Their :attr:`HermitianMatrix.entries` array is
read-only and always exactly Hermitian, since construction symmetrizes the
input as ``(M + M†) / 2`` after checking it is Hermitian within tolerance.

Example:

    .. code-block:: python

        import numpy as np
        from monometric.hermitian import random_density, random_tangent, validate_density

        D = validate_density(np.diag([0.75, 0.25]))
        D.eigenvalues  # array([0.75, 0.25])

        D = random_density(3, seed=7)
        A = random_tangent(3, seed=8)
"""

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, Mapping, Optional, Union

import numpy as np
import numpy.typing as npt
from scipy import linalg

from .errors import (
    DimensionMismatchError,
    DomainError,
    MatrixFormatError,
    NotHermitianError,
    NotStrictlyPositiveError,
    NotUnitaryError,
    NumericalFailureError,
    TraceMismatchError,
)
from .types import ComplexArray, RealArray, Seed

__all__ = [
    "DEFAULT_FLOOR",
    "HERMITIAN_TOLERANCE",
    "TRACE_TOLERANCE",
    "TANGENT_TRACE_TOLERANCE",
    "MatrixLike",
    "as_matrix",
    "HermitianMatrix",
    "DensityMatrix",
    "TangentVector",
    "SpectralDecomposition",
    "spectral_decompose",
    "matrix_function",
    "validate_density",
    "random_density",
    "random_tangent",
    "random_unitary",
    "require_unitary",
    "to_eigenbasis",
    "matrix_from_json",
    "matrix_to_json",
    "load_matrix",
    "dump_matrix",
]

DEFAULT_FLOOR = 1e-9
"""Default lower bound on the eigenvalues of a density"""

HERMITIAN_TOLERANCE = 1e-10
"""Largest accepted ``|M - M†|`` entry, relative to ``max(1, max|M|)``"""

TRACE_TOLERANCE = 1e-10
"""Largest accepted ``|Tr D - 1|`` for densities"""

TANGENT_TRACE_TOLERANCE = 1e-12
"""Largest accepted ``|Tr A|`` for tangents, relative to ``max(1, ‖A‖_F)``"""

RECONSTRUCTION_TOLERANCE = 1e-10
"""Largest accepted relative Frobenius error of a spectral decomposition"""

MatrixLike = Union["HermitianMatrix", npt.ArrayLike]
"""Anything that can be turned into a square complex matrix"""


def as_matrix(value: MatrixLike) -> ComplexArray:
    """Convert a matrix like value into a fresh, square, finite complex array

    Args:
        value (:obj:`MatrixLike`): Matrix or nested sequence

    Returns:
        :obj:`numpy.ndarray`: Complex ``n×n`` array (a copy)

    Raises:
        DimensionMismatchError: If the value is not a non-empty square matrix
        DomainError: If an entry is not finite
    """
    if isinstance(value, HermitianMatrix):
        return value.entries.copy()
    array = np.array(value, dtype=np.complex128)
    if array.ndim != 2 or array.shape[0] != array.shape[1] or array.shape[0] == 0:
        raise DimensionMismatchError(f"Expected a non-empty square matrix, got shape {array.shape}")
    if not np.all(np.isfinite(array)):
        raise DomainError("Matrix has non-finite entries")
    return array


class HermitianMatrix:
    """Hermitian ``n×n`` complex matrix

    Args:
        entries (:obj:`MatrixLike`): The matrix
        tolerance (:obj:`float`, optional): Accepted deviation from Hermitian symmetry,
            relative to ``max(1, max|M|)``

    Raises:
        NotHermitianError: If the matrix is not Hermitian within tolerance
    """

    def __init__(self, entries: MatrixLike, tolerance: float = HERMITIAN_TOLERANCE) -> None:
        matrix = as_matrix(entries)
        scale = max(1.0, float(np.max(np.abs(matrix))))
        asymmetry = float(np.max(np.abs(matrix - matrix.conj().T)))
        if asymmetry > tolerance * scale:
            raise NotHermitianError(f"Matrix is not Hermitian, max |M - M*| = {asymmetry:.3e}")

        matrix = (matrix + matrix.conj().T) / 2
        matrix.setflags(write=False)
        self._entries: ComplexArray = matrix

    @property
    def entries(self) -> ComplexArray:
        """:obj:`numpy.ndarray`: Read-only, exactly Hermitian entries"""
        return self._entries

    @property
    def n(self) -> int:
        """:obj:`int`: Dimension"""
        return int(self._entries.shape[0])

    def trace(self) -> float:
        """Real trace of the matrix"""
        return float(np.trace(self._entries).real)

    def frobenius_norm(self) -> float:
        """Frobenius norm of the matrix"""
        return float(np.linalg.norm(self._entries))

    def __array__(self, dtype: Any = None, copy: Any = None) -> ComplexArray:
        if dtype is None:
            return self._entries
        return self._entries.astype(dtype)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(n={self.n})"


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigen decomposition ``H = U·Diag(λ)·U†``

    Attributes:
        eigenvalues (:obj:`numpy.ndarray`): Real eigenvalues in descending order
        unitary (:obj:`numpy.ndarray`): Unitary whose columns are the matching eigenvectors
    """

    eigenvalues: RealArray
    unitary: ComplexArray

    def reconstruct(self) -> ComplexArray:
        """Rebuild ``U·Diag(λ)·U†``"""
        return (self.unitary * self.eigenvalues) @ self.unitary.conj().T  # type: ignore[no-any-return]


def spectral_decompose(matrix: MatrixLike) -> SpectralDecomposition:
    """Decompose a Hermitian matrix

    Args:
        matrix (:obj:`MatrixLike`): Hermitian matrix

    Returns:
        :class:`SpectralDecomposition`: Eigenvalues sorted in descending order

    Raises:
        NotHermitianError: If the matrix is not Hermitian
        NumericalFailureError: If the eigensolver fails or the reconstruction check does not hold
    """
    entries = matrix.entries if isinstance(matrix, HermitianMatrix) else HermitianMatrix(matrix).entries
    try:
        values, vectors = linalg.eigh(entries)
    except (linalg.LinAlgError, ValueError) as e:
        raise NumericalFailureError(f"Eigensolver failed: {e}") from e

    values = np.ascontiguousarray(values[::-1], dtype=np.float64)
    vectors = np.ascontiguousarray(vectors[:, ::-1], dtype=np.complex128)
    values.setflags(write=False)
    vectors.setflags(write=False)
    decomposition = SpectralDecomposition(values, vectors)

    norm = float(np.linalg.norm(entries))
    error = float(np.linalg.norm(decomposition.reconstruct() - entries))
    if error > RECONSTRUCTION_TOLERANCE * norm + 1e-300:
        raise NumericalFailureError(f"Spectral reconstruction error {error:.3e} exceeds tolerance")
    return decomposition


def matrix_function(matrix: MatrixLike, func: Callable[[RealArray], npt.ArrayLike]) -> ComplexArray:
    """Spectral calculus ``f(H) = U·Diag(f(λ))·U†``

    Args:
        matrix (:obj:`MatrixLike`): Hermitian matrix
        func (:obj:`typing.Callable`): Vectorized function applied to the eigenvalues

    Returns:
        :obj:`numpy.ndarray`: ``f(H)``
    """
    if isinstance(matrix, DensityMatrix):
        decomposition = matrix.spectrum
    else:
        decomposition = spectral_decompose(matrix)
    values = np.asarray(func(decomposition.eigenvalues), dtype=np.complex128)
    unitary = decomposition.unitary
    result = (unitary * values) @ unitary.conj().T
    return (result + result.conj().T) / 2  # type: ignore[no-any-return]


class DensityMatrix(HermitianMatrix):
    """Strictly positive Hermitian matrix of trace one

    The spectrum is computed once on construction.

    Args:
        entries (:obj:`MatrixLike`): The matrix
        floor (:obj:`float`, optional): Lower bound on the eigenvalues

    Attributes:
        floor (:obj:`float`): Lower bound the density was validated against
        spectrum (:class:`SpectralDecomposition`): Cached decomposition

    Raises:
        NotHermitianError: If the matrix is not Hermitian
        TraceMismatchError: If the trace is not one
        NotStrictlyPositiveError: If the smallest eigenvalue is below ``floor``
    """

    def __init__(self, entries: MatrixLike, floor: float = DEFAULT_FLOOR) -> None:
        super().__init__(entries)
        trace = self.trace()
        if abs(trace - 1.0) > TRACE_TOLERANCE:
            raise TraceMismatchError(f"Density must have trace 1, got {trace!r}")
        self.floor = floor
        self.spectrum = spectral_decompose(self)
        smallest = float(self.spectrum.eigenvalues[-1])
        if smallest < floor:
            raise NotStrictlyPositiveError(f"Smallest eigenvalue {smallest:.3e} is below the floor {floor:.3e}")

    @property
    def eigenvalues(self) -> RealArray:
        """:obj:`numpy.ndarray`: Eigenvalues ``p_1 ≥ … ≥ p_n > 0``"""
        return self.spectrum.eigenvalues

    @property
    def unitary(self) -> ComplexArray:
        """:obj:`numpy.ndarray`: Eigenvector columns matching :attr:`eigenvalues`"""
        return self.spectrum.unitary

    def power(self, exponent: float) -> ComplexArray:
        """``D^exponent`` by spectral calculus"""
        return matrix_function(self, lambda p: np.power(p, exponent))

    def inverse(self) -> ComplexArray:
        """``D⁻¹`` by spectral calculus"""
        return matrix_function(self, np.reciprocal)

    def log(self) -> ComplexArray:
        """``log D`` by spectral calculus"""
        return matrix_function(self, np.log)


class TangentVector(HermitianMatrix):
    """Traceless Hermitian matrix, a tangent at any density of the same dimension

    Args:
        entries (:obj:`MatrixLike`): The matrix

    Raises:
        NotHermitianError: If the matrix is not Hermitian
        TraceMismatchError: If the trace is not zero
    """

    def __init__(self, entries: MatrixLike) -> None:
        super().__init__(entries)
        trace = self.trace()
        if abs(trace) > TANGENT_TRACE_TOLERANCE * max(1.0, self.frobenius_norm()):
            raise TraceMismatchError(f"Tangent must be traceless, got trace {trace!r}")


def validate_density(matrix: MatrixLike, floor: float = DEFAULT_FLOOR) -> DensityMatrix:
    """Validate a matrix as a density

    Args:
        matrix (:obj:`MatrixLike`): Candidate matrix
        floor (:obj:`float`, optional): Lower bound on the eigenvalues

    Returns:
        :class:`DensityMatrix`: The validated density with cached spectrum

    Raises:
        NotHermitianError: If the matrix is not Hermitian within ``1e-10``
        TraceMismatchError: If the trace differs from one by more than ``1e-10``
        NotStrictlyPositiveError: If the smallest eigenvalue is below ``floor``
    """
    if isinstance(matrix, DensityMatrix) and matrix.floor >= floor:
        return matrix
    return DensityMatrix(matrix, floor=floor)


def _ginibre(rng: np.random.Generator, rows: int, columns: int) -> ComplexArray:
    shape = (rows, columns)
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)  # type: ignore[no-any-return]


def random_density(n: int, seed: Seed, floor: float = DEFAULT_FLOOR) -> DensityMatrix:
    """Draw a random density from the Ginibre ensemble

    ``D = (1 - δ)·GG†/Tr(GG†) + δ·I/n`` where ``δ`` is 0 if the smallest
    eigenvalue of the normalized Wishart matrix is at least ``floor`` and
    ``2·n·floor`` otherwise.

    Args:
        n (:obj:`int`): Dimension, at least 2
        seed (:obj:`monometric.types.Seed`): Seed for :func:`numpy.random.default_rng`
        floor (:obj:`float`, optional): Lower bound on the eigenvalues

    Returns:
        :class:`DensityMatrix`: Deterministic in ``(n, seed, floor)``

    Raises:
        DomainError: If ``n < 2`` or ``floor`` is larger than ``1 / (2n)``
    """
    if n < 2:
        raise DomainError(f"Dimension must be at least 2, got {n}")
    if floor < 0 or 2 * n * floor > 1:
        raise DomainError(f"Floor {floor} is not attainable in dimension {n}")

    rng = np.random.default_rng(seed)
    g = _ginibre(rng, n, n)
    wishart = g @ g.conj().T
    wishart = (wishart + wishart.conj().T) / 2
    wishart /= np.trace(wishart).real

    smallest = float(linalg.eigvalsh(wishart)[0])
    mixing = 0.0 if smallest >= floor else 2 * n * floor
    entries = (1 - mixing) * wishart + mixing * np.eye(n) / n
    return DensityMatrix(entries, floor=floor)


def random_tangent(n: int, seed: Seed) -> TangentVector:
    """Draw a random tangent

    Real and imaginary parts are independent standard normals, the result is
    symmetrized and projected to trace zero.

    Args:
        n (:obj:`int`): Dimension, at least 2
        seed (:obj:`monometric.types.Seed`): Seed for :func:`numpy.random.default_rng`

    Returns:
        :class:`TangentVector`: Deterministic in ``(n, seed)``
    """
    if n < 2:
        raise DomainError(f"Dimension must be at least 2, got {n}")
    rng = np.random.default_rng(seed)
    a = _ginibre(rng, n, n)
    a = (a + a.conj().T) / 2
    a -= np.trace(a).real / n * np.eye(n)
    return TangentVector(a)


def random_unitary(n: int, seed: Seed) -> ComplexArray:
    """Draw a Haar random unitary

    QR decomposition of a Ginibre matrix with the phases of ``R``'s diagonal
    moved into ``Q``.

    Args:
        n (:obj:`int`): Dimension
        seed (:obj:`monometric.types.Seed`): Seed for :func:`numpy.random.default_rng`

    Returns:
        :obj:`numpy.ndarray`: Unitary ``n×n`` matrix
    """
    if n < 1:
        raise DomainError(f"Dimension must be positive, got {n}")
    rng = np.random.default_rng(seed)
    q, r = linalg.qr(_ginibre(rng, n, n))
    phases = np.diag(r) / np.abs(np.diag(r))
    return q * phases  # type: ignore[no-any-return]


def require_unitary(unitary: npt.ArrayLike, tolerance: float = 1e-10) -> ComplexArray:
    """Check ``U†U = I``

    Args:
        unitary (:obj:`numpy.typing.ArrayLike`): Candidate unitary
        tolerance (:obj:`float`, optional): Largest accepted entry of ``U†U - I``

    Returns:
        :obj:`numpy.ndarray`: The unitary as complex array

    Raises:
        NotUnitaryError: If the matrix is not unitary
    """
    u = np.array(unitary, dtype=np.complex128)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise NotUnitaryError(f"Unitary must be square, got shape {u.shape}")
    defect = float(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))))
    if defect > tolerance:
        raise NotUnitaryError(f"Matrix is not unitary, max |U*U - I| = {defect:.3e}")
    return u


def to_eigenbasis(density: DensityMatrix, matrix: MatrixLike) -> ComplexArray:
    """Express a matrix in the eigenbasis of a density

    Args:
        density (:class:`DensityMatrix`): Density providing the basis
        matrix (:obj:`MatrixLike`): Matrix to transform

    Returns:
        :obj:`numpy.ndarray`: ``U†·A·U`` where ``U`` diagonalizes the density

    Raises:
        DimensionMismatchError: If the dimensions differ
    """
    a = matrix.entries if isinstance(matrix, HermitianMatrix) else as_matrix(matrix)
    if a.shape[0] != density.n:
        raise DimensionMismatchError(f"Dimension {a.shape[0]} does not match density dimension {density.n}")
    u = density.unitary
    return u.conj().T @ a @ u  # type: ignore[no-any-return]


def matrix_from_json(document: Mapping[str, Any]) -> ComplexArray:
    """Parse the JSON matrix format ``{"n": int, "re": [[...]], "im": [[...]]}``

    ``"im"`` may be omitted, in which case the matrix is real.

    Args:
        document (:obj:`dict`): Parsed JSON document

    Returns:
        :obj:`numpy.ndarray`: Complex ``n×n`` array

    Raises:
        MatrixFormatError: If the document does not describe an ``n×n`` matrix
    """
    if not isinstance(document, Mapping):
        raise MatrixFormatError(f"Matrix document must be an object, got {type(document).__name__}")
    n = document.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise MatrixFormatError(f"Matrix document needs a positive integer 'n', got {n!r}")
    if "re" not in document:
        raise MatrixFormatError("Matrix document is missing 're'")

    parts = []
    for key in ("re", "im"):
        if key not in document:
            parts.append(np.zeros((n, n)))
            continue
        try:
            part = np.array(document[key], dtype=np.float64)
        except (TypeError, ValueError) as e:
            raise MatrixFormatError(f"Entries of '{key}' must be numbers: {e}") from e
        if part.shape != (n, n):
            raise MatrixFormatError(f"'{key}' must have shape ({n}, {n}), got {part.shape}")
        if not np.all(np.isfinite(part)):
            raise MatrixFormatError(f"'{key}' has non-finite entries")
        parts.append(part)
    return parts[0] + 1j * parts[1]  # type: ignore[no-any-return]


def matrix_to_json(matrix: MatrixLike) -> Dict[str, Any]:
    """Serialize a matrix into the JSON matrix format

    Args:
        matrix (:obj:`MatrixLike`): Matrix to serialize

    Returns:
        :obj:`dict`: Document with the keys ``n``, ``re`` and ``im``
    """
    a = as_matrix(matrix)
    return {"n": int(a.shape[0]), "re": a.real.tolist(), "im": a.imag.tolist()}


def load_matrix(path: Union[str, Path]) -> ComplexArray:
    """Read a matrix from a JSON file

    Args:
        path (:obj:`str` | :obj:`pathlib.Path`): File to read

    Returns:
        :obj:`numpy.ndarray`: The matrix

    Raises:
        MatrixFormatError: If the file is not valid JSON or not a matrix document
        OSError: If the file cannot be read
    """
    text = Path(path).read_text(encoding="utf-8")
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise MatrixFormatError(f"{path}: invalid JSON: {e}") from e
    return matrix_from_json(document)


def dump_matrix(matrix: MatrixLike, path: Optional[Union[str, Path]] = None) -> str:
    """Write a matrix as JSON

    Args:
        matrix (:obj:`MatrixLike`): Matrix to write
        path (:obj:`str` | :obj:`pathlib.Path`, optional): File to write to

    Returns:
        :obj:`str`: The JSON text
    """
    text = json.dumps(matrix_to_json(matrix), sort_keys=True, indent=2)
    if path is not None:
        Path(path).write_text(text + "\n", encoding="utf-8")
    return text
