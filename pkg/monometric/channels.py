"""Stochastic maps in Kraus form

A :class:`KrausChannel` acts as ``M ↦ Σ K_i·M·K_i†`` and is trace preserving,
``Σ K_i†·K_i = I``. Classical column-stochastic matrices are channels on
diagonal densities (:func:`classical_stochastic`), and the coarse-graining
that forgets off-diagonal blocks is :func:`pinching`.

The checks in this module verify the two inequalities every stochastic map
satisfies: monotone metrics contract (:func:`check_contraction`) and the
operator Schwarz inequality holds (:func:`check_schwarz`).

Example:

    .. code-block:: python

        from monometric.channels import check_contraction, random_channel
        from monometric.hermitian import random_density, random_tangent

        channel = random_channel(3, env_dim=2, seed=7)
        D = random_density(3, seed=8)
        A = random_tangent(3, seed=9)
        check_contraction("km", channel, D, A)["passed"]  # True
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence, Union

import numpy as np
import numpy.typing as npt
from scipy import linalg

from .config import Tolerances
from .errors import (
    ChannelError,
    DimensionMismatchError,
    MatrixFormatError,
    NotColumnStochasticError,
    NotStrictlyPositiveError,
    SkipTrial,
)
from .functions import MonotoneFunctionKind, parse_kind
from .hermitian import (
    DensityMatrix,
    HermitianMatrix,
    MatrixLike,
    as_matrix,
    matrix_from_json,
    random_unitary,
    require_unitary,
)
from .logging import LOGGER
from .metric import metric_value
from .types import ComplexArray, ContractionReport, InvarianceReport, RealArray, SchwarzReport, Seed

__all__ = [
    "COMPLETENESS_TOLERANCE",
    "KrausChannel",
    "apply",
    "identity_channel",
    "unitary_channel",
    "pinching",
    "random_channel",
    "classical_stochastic",
    "merge_outcomes",
    "check_contraction",
    "check_schwarz",
    "check_unitary_invariance",
    "channel_from_json",
    "channel_to_json",
    "load_channel",
    "dump_channel",
]

COMPLETENESS_TOLERANCE = 1e-10
"""Largest accepted entry of ``Σ K†K - I``"""


class KrausChannel:
    """Trace preserving completely positive map given by Kraus operators

    Args:
        kraus_ops (:obj:`numpy.typing.ArrayLike`): Sequence of ``output_dim×input_dim`` matrices
        tolerance (:obj:`float`, optional): Accepted deviation of ``Σ K†K`` from the identity

    Attributes:
        input_dim (:obj:`int`): Dimension of the input space
        output_dim (:obj:`int`): Dimension of the output space

    Raises:
        ChannelError: If there are no operators or they are not trace preserving
    """

    def __init__(
        self, kraus_ops: Union[Sequence[npt.ArrayLike], npt.ArrayLike], tolerance: float = COMPLETENESS_TOLERANCE
    ) -> None:
        ops = np.array(kraus_ops, dtype=np.complex128)
        if ops.ndim == 2:
            ops = ops[None, :, :]
        if ops.ndim != 3 or ops.shape[0] == 0 or 0 in ops.shape:
            raise ChannelError(f"Expected a non-empty list of matrices, got shape {ops.shape}")
        if not np.all(np.isfinite(ops)):
            raise ChannelError("Kraus operators have non-finite entries")

        completeness = np.einsum("kji,kjl->il", ops.conj(), ops)
        defect = float(np.max(np.abs(completeness - np.eye(ops.shape[2]))))
        if defect > tolerance:
            raise ChannelError(f"Kraus operators are not trace preserving, max |Σ K*K - I| = {defect:.3e}")

        ops.setflags(write=False)
        self._ops: ComplexArray = ops

    @property
    def kraus_ops(self) -> ComplexArray:
        """:obj:`numpy.ndarray`: Read-only array of shape ``(count, output_dim, input_dim)``"""
        return self._ops

    @property
    def input_dim(self) -> int:
        return int(self._ops.shape[2])

    @property
    def output_dim(self) -> int:
        return int(self._ops.shape[1])

    def act(self, matrix: MatrixLike) -> ComplexArray:
        """Apply the Kraus sum to an arbitrary (not necessarily Hermitian) matrix

        Raises:
            DimensionMismatchError: If the matrix does not match the input dimension
        """
        m = as_matrix(matrix)
        if m.shape[0] != self.input_dim:
            raise DimensionMismatchError(f"Channel input dimension {self.input_dim} does not match {m.shape[0]}")
        return np.einsum("kij,jl,kml->im", self._ops, m, self._ops.conj())  # type: ignore[no-any-return]

    def __repr__(self) -> str:
        return f"KrausChannel(input_dim={self.input_dim}, output_dim={self.output_dim}, count={self._ops.shape[0]})"


def apply(channel: KrausChannel, matrix: MatrixLike) -> HermitianMatrix:
    """Apply a channel to a Hermitian matrix

    Args:
        channel (:class:`KrausChannel`): The channel
        matrix (:obj:`monometric.hermitian.MatrixLike`): Hermitian input

    Returns:
        :class:`monometric.hermitian.HermitianMatrix`: ``Σ K_i·M·K_i†``

    Raises:
        DimensionMismatchError: If the dimensions do not match
    """
    return HermitianMatrix(channel.act(HermitianMatrix(matrix)))


def identity_channel(n: int) -> KrausChannel:
    """Channel with the single Kraus operator ``I``"""
    return KrausChannel([np.eye(n)])


def unitary_channel(unitary: npt.ArrayLike) -> KrausChannel:
    """Channel with the single Kraus operator ``U``

    Raises:
        NotUnitaryError: If ``U`` is not unitary
    """
    return KrausChannel([require_unitary(unitary)])


def pinching(block_sizes: Sequence[int]) -> KrausChannel:
    """Coarse-graining that erases every entry outside the diagonal blocks

    Args:
        block_sizes (:obj:`list` of :obj:`int`): Positive block sizes, summing to the dimension

    Returns:
        :class:`KrausChannel`: Kraus operators are the block projectors

    Raises:
        ChannelError: If the partition is empty or has a non positive block
    """
    sizes = list(block_sizes)
    if not sizes or any(int(size) != size or size < 1 for size in sizes):
        raise ChannelError(f"Block sizes must be positive integers, got {sizes}")
    n = sum(sizes)
    projectors = []
    start = 0
    for size in sizes:
        projector = np.zeros((n, n))
        projector[start : start + size, start : start + size] = np.eye(size)
        projectors.append(projector)
        start += size
    return KrausChannel(projectors)


def random_channel(n: int, env_dim: int, seed: Seed) -> KrausChannel:
    """Draw a random channel from a random isometry

    A ``(n·env_dim)×n`` Ginibre matrix is orthonormalized by QR and sliced into
    ``env_dim`` Kraus blocks. ``env_dim = 1`` gives a random unitary channel.

    Args:
        n (:obj:`int`): Dimension
        env_dim (:obj:`int`): Number of Kraus operators, at least 1
        seed (:obj:`monometric.types.Seed`): Seed for :func:`numpy.random.default_rng`

    Returns:
        :class:`KrausChannel`: Deterministic in ``(n, env_dim, seed)``
    """
    if n < 1 or env_dim < 1:
        raise ChannelError(f"Dimension and environment must be positive, got {n} and {env_dim}")
    if env_dim == 1:
        return KrausChannel([random_unitary(n, seed)])
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((n * env_dim, n)) + 1j * rng.standard_normal((n * env_dim, n))
    isometry, _ = linalg.qr(g, mode="economic")
    return KrausChannel(isometry.reshape(env_dim, n, n))


def classical_stochastic(matrix: npt.ArrayLike) -> KrausChannel:
    """Channel of a column-stochastic matrix

    Kraus operators are ``√Π_ij·E_ij``, so diagonal densities are mapped as
    ``Diag(p) ↦ Diag(Πp)`` and off-diagonal entries are erased.

    Args:
        matrix (:obj:`numpy.typing.ArrayLike`): ``m×n`` column-stochastic matrix ``Π``

    Returns:
        :class:`KrausChannel`: Channel from dimension ``n`` to ``m``

    Raises:
        NotColumnStochasticError: If an entry is negative or a column does not sum to 1
    """
    pi = np.array(matrix, dtype=np.float64)
    if pi.ndim != 2 or 0 in pi.shape or not np.all(np.isfinite(pi)):
        raise NotColumnStochasticError(f"Expected a finite matrix, got shape {pi.shape}")
    if np.any(pi < 0):
        raise NotColumnStochasticError("Stochastic matrix has negative entries")
    sums = pi.sum(axis=0)
    if np.any(np.abs(sums - 1.0) > 1e-12):
        raise NotColumnStochasticError(f"Columns must sum to 1, got {sums.tolist()}")

    m, n = pi.shape
    ops = []
    for i, j in zip(*np.nonzero(pi)):
        op = np.zeros((m, n))
        op[i, j] = np.sqrt(pi[i, j])
        ops.append(op)
    return KrausChannel(ops)


def merge_outcomes(n: int, first: int, second: int) -> RealArray:
    """0-1 column-stochastic matrix identifying two outcomes

    Every row has a single 1 except for the row of ``first`` which also
    collects ``second``. Outcomes keep their order, ``second`` is dropped.

    Args:
        n (:obj:`int`): Number of outcomes, at least 2
        first (:obj:`int`): Zero based outcome that stays
        second (:obj:`int`): Zero based outcome merged into ``first``

    Returns:
        :obj:`numpy.ndarray`: ``(n-1)×n`` matrix
    """
    if n < 2 or not (0 <= first < n and 0 <= second < n) or first == second:
        raise NotColumnStochasticError(f"Cannot merge outcomes {first} and {second} of {n}")
    kept = [k for k in range(n) if k != second]
    pi = np.zeros((n - 1, n))
    for row, outcome in enumerate(kept):
        pi[row, outcome] = 1.0
    pi[kept.index(first), second] = 1.0
    return pi


def _square_channel(channel: KrausChannel, density: DensityMatrix) -> None:
    if channel.input_dim != density.n or channel.output_dim != density.n:
        raise DimensionMismatchError(
            f"Metric contraction needs a channel on dimension {density.n}, "
            f"got {channel.input_dim} -> {channel.output_dim}"
        )


def check_contraction(
    kind: Union[str, MonotoneFunctionKind],
    channel: KrausChannel,
    density: DensityMatrix,
    tangent: MatrixLike,
    tolerances: Optional[Tolerances] = None,
) -> ContractionReport:
    """Compare ``K_D(A, A)`` with ``K_T(D)(T(A), T(A))``

    If ``T(D)`` is too singular it is replaced by ``(1-δ)·T(D) + δ·I/n``,
    which is the output of the channel followed by a depolarizing map. The
    tangent is mapped accordingly to ``(1-δ)·T(A)``.

    Args:
        kind (:obj:`str` | :class:`monometric.functions.MonotoneFunctionKind`): Catalog entry
        channel (:class:`KrausChannel`): Channel with equal input and output dimension
        density (:class:`monometric.hermitian.DensityMatrix`): Base point ``D``
        tangent (:obj:`monometric.hermitian.MatrixLike`): Tangent ``A``
        tolerances (:class:`monometric.config.Tolerances`, optional): Tolerances, defaults apply if omitted

    Returns:
        :obj:`monometric.types.ContractionReport`: Values before and after, margin and verdict

    Raises:
        SkipTrial: If the output is too singular even after mixing
        DimensionMismatchError: If the channel changes the dimension
    """
    tolerances = tolerances or Tolerances()
    kind = parse_kind(kind)
    _square_channel(channel, density)

    before = metric_value(kind, density, tangent)
    output = channel.act(density)
    mapped = channel.act(tangent)

    floor_mixed = False
    smallest = float(linalg.eigvalsh(HermitianMatrix(output).entries)[0])
    if smallest < tolerances.output_floor:
        delta = tolerances.floor_mixing
        output = (1.0 - delta) * output + delta * np.eye(density.n) / density.n
        mapped = (1.0 - delta) * mapped
        floor_mixed = True
        LOGGER.debug("Output density mixed with I/n, smallest eigenvalue was %.3e", smallest)
    try:
        output_density = DensityMatrix(output, floor=tolerances.output_floor)
    except NotStrictlyPositiveError as e:
        raise SkipTrial(f"Channel output too singular: {e}") from e

    after = metric_value(kind, output_density, mapped)
    margin = (before - after) / before if before > 0 else 0.0
    return ContractionReport(
        kind=kind.identifier,
        value_before=before,
        value_after=after,
        margin=margin,
        passed=after <= before * (1.0 + tolerances.contraction_rel) + tolerances.contraction_abs,
        floor_mixed=floor_mixed,
    )


def check_schwarz(
    channel: KrausChannel,
    density: DensityMatrix,
    operator: npt.ArrayLike,
    tolerances: Optional[Tolerances] = None,
) -> SchwarzReport:
    """Check ``T(K)·T(D)⁻¹·T(K)† ≤ T(K·D⁻¹·K†)``

    Args:
        channel (:class:`KrausChannel`): The channel
        density (:class:`monometric.hermitian.DensityMatrix`): Strictly positive ``D``
        operator (:obj:`numpy.typing.ArrayLike`): Arbitrary complex ``K``
        tolerances (:class:`monometric.config.Tolerances`, optional): Tolerances, defaults apply if omitted

    Returns:
        :obj:`monometric.types.SchwarzReport`: Smallest eigenvalue of the difference and verdict

    Raises:
        SkipTrial: If ``T(D)`` is too singular
    """
    tolerances = tolerances or Tolerances()
    k = as_matrix(operator)
    if k.shape[0] != density.n:
        raise DimensionMismatchError(f"Operator of dimension {k.shape[0]} at a density of dimension {density.n}")

    output = HermitianMatrix(channel.act(density))
    try:
        output_density = DensityMatrix(output, floor=tolerances.output_floor)
    except NotStrictlyPositiveError as e:
        raise SkipTrial(f"Channel output too singular: {e}") from e

    left = channel.act(k @ density.inverse() @ k.conj().T)
    mapped = channel.act(k)
    right = mapped @ output_density.inverse() @ mapped.conj().T
    difference = left - right
    smallest = float(linalg.eigvalsh((difference + difference.conj().T) / 2)[0])
    tolerance = tolerances.schwarz * max(1.0, float(np.linalg.norm(left, 2)))
    return SchwarzReport(min_eigenvalue=smallest, tolerance=tolerance, passed=smallest >= -tolerance)


def check_unitary_invariance(
    kind: Union[str, MonotoneFunctionKind],
    unitary: npt.ArrayLike,
    density: DensityMatrix,
    tangent: MatrixLike,
    tolerances: Optional[Tolerances] = None,
) -> InvarianceReport:
    """Compare ``K_D(A, A)`` with ``K_UDU†(UAU†, UAU†)``

    Args:
        kind (:obj:`str` | :class:`monometric.functions.MonotoneFunctionKind`): Catalog entry
        unitary (:obj:`numpy.typing.ArrayLike`): Unitary ``U``
        density (:class:`monometric.hermitian.DensityMatrix`): Base point ``D``
        tangent (:obj:`monometric.hermitian.MatrixLike`): Tangent ``A``
        tolerances (:class:`monometric.config.Tolerances`, optional): Tolerances, defaults apply if omitted

    Returns:
        :obj:`monometric.types.InvarianceReport`: Both values and verdict

    Raises:
        NotUnitaryError: If ``U`` is not unitary
    """
    tolerances = tolerances or Tolerances()
    kind = parse_kind(kind)
    u = require_unitary(unitary)
    if u.shape[0] != density.n:
        raise DimensionMismatchError(f"Unitary of dimension {u.shape[0]} at a density of dimension {density.n}")
    a = as_matrix(tangent)

    floor = min(density.floor, float(density.eigenvalues[-1]) / 2)
    rotated = DensityMatrix(u @ density.entries @ u.conj().T, floor=floor)
    value = metric_value(kind, density, a)
    rotated_value = metric_value(kind, rotated, u @ a @ u.conj().T)
    difference = abs(rotated_value - value)
    return InvarianceReport(
        kind=kind.identifier,
        value=value,
        rotated_value=rotated_value,
        difference=difference,
        passed=difference <= tolerances.unitary_rel * abs(value),
    )


def _kraus_from_json(document: Any, rows: int, columns: int) -> ComplexArray:
    if not isinstance(document, Mapping):
        raise MatrixFormatError("Kraus operator must be a matrix object")
    if rows == columns:
        return matrix_from_json({"n": rows, **document})
    parts = []
    for key in ("re", "im"):
        if key not in document:
            if key == "re":
                raise MatrixFormatError("Kraus operator is missing 're'")
            parts.append(np.zeros((rows, columns)))
            continue
        try:
            part = np.array(document[key], dtype=np.float64)
        except (TypeError, ValueError) as e:
            raise MatrixFormatError(f"Entries of '{key}' must be numbers: {e}") from e
        if part.shape != (rows, columns):
            raise MatrixFormatError(f"'{key}' must have shape ({rows}, {columns}), got {part.shape}")
        parts.append(part)
    return parts[0] + 1j * parts[1]  # type: ignore[no-any-return]


def channel_from_json(document: Mapping[str, Any]) -> KrausChannel:
    """Parse the channel format ``{"n_in": int, "n_out": int, "kraus": [matrix, ...]}``

    Kraus matrices use the matrix format, ``"n"`` may be omitted and is
    ignored for rectangular operators.

    Raises:
        MatrixFormatError: If the document is malformed
        ChannelError: If the operators are not trace preserving
    """
    if not isinstance(document, Mapping):
        raise MatrixFormatError("Channel document must be an object")
    n_in, n_out, kraus = document.get("n_in"), document.get("n_out"), document.get("kraus")
    for name, value in (("n_in", n_in), ("n_out", n_out)):
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise MatrixFormatError(f"Channel document needs a positive integer '{name}', got {value!r}")
    if not isinstance(kraus, list) or not kraus:
        raise MatrixFormatError("Channel document needs a non-empty list 'kraus'")
    assert isinstance(n_in, int) and isinstance(n_out, int)
    return KrausChannel([_kraus_from_json(op, n_out, n_in) for op in kraus])


def channel_to_json(channel: KrausChannel) -> Dict[str, Any]:
    """Serialize a channel into the channel format"""
    kraus: List[Dict[str, Any]] = []
    for op in channel.kraus_ops:
        item: Dict[str, Any] = {"re": op.real.tolist(), "im": op.imag.tolist()}
        if channel.input_dim == channel.output_dim:
            item["n"] = channel.input_dim
        kraus.append(item)
    return {"n_in": channel.input_dim, "n_out": channel.output_dim, "kraus": kraus}


def load_channel(path: Union[str, Path]) -> KrausChannel:
    """Read a channel from a JSON file

    Raises:
        MatrixFormatError: If the file is not valid JSON or not a channel document
        OSError: If the file cannot be read
    """
    text = Path(path).read_text(encoding="utf-8")
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise MatrixFormatError(f"{path}: invalid JSON: {e}") from e
    return channel_from_json(document)


def dump_channel(channel: KrausChannel, path: Optional[Union[str, Path]] = None) -> str:
    """Write a channel as JSON, returns the text"""
    text = json.dumps(channel_to_json(channel), sort_keys=True, indent=2)
    if path is not None:
        Path(path).write_text(text + "\n", encoding="utf-8")
    return text
