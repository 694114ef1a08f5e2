"""Command line interface

Usage::

    monometric [--verbose] <command> [arguments] [--flag value ...]

Commands:

* ``omf list``: catalog of operator monotone functions
* ``omf check``: symmetry, bounds and sampled operator monotonicity of catalog kinds
* ``metric eval <kind> <density> <tangent> [tangent2]``: metric value with the two extremal values
* ``fuzz <suite>``: seeded property fuzz, see :mod:`monometric.fuzz`
* ``classical distance <p> <r>``: geodesic and Hellinger distance of two probability vectors
* ``bloch profile``: radial and tangential coefficients as CSV, cross checked against the eigenbasis evaluator
* ``pure limit``: radial extension of the metrics to the pure states
* ``help``: list the commands

JSON goes to standard output (or ``--out``) with sorted keys, log messages go
to standard error. The exit code is ``0`` if every checked property held,
``1`` on a property violation and ``2`` on usage or input errors.
"""

import csv
import io
import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

import numpy as np

from .bloch import bloch_profile, check_crosscheck
from .boundary import DEFAULT_GRID, BoundarySequence, fubini_study, radial_extension_limit
from .classical import geodesic_distance, hellinger, parse_vector
from .command import COMMANDS, command, find_command
from .config import RunConfig, Tolerances
from .errors import DomainError, MonometricError
from .functions import (
    catalog,
    check_bounds,
    check_operator_monotone_sample,
    check_symmetry,
    describe_kind,
    eval_f,
    parse_kind,
)
from .fuzz import run_suite
from .hermitian import TangentVector, load_matrix, validate_density
from .info import NAME, __version__
from .logging import log, set_verbose
from .metric import metric_value
from .types import Direction, ExitCode, LogLevel, MetricRecord, Suite

__all__ = ["main"]

DEFAULT_RADII = [round(0.1 * k, 1) for k in range(1, 10)]
"""Default radius grid of ``bloch profile``"""


def _emit(text: str, out: str = "-") -> None:
    if out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _emit_json(document: Any, out: str = "-") -> None:
    _emit(json.dumps(document, sort_keys=True, indent=2) + "\n", out)


def _tolerances(tol: Optional[List[str]]) -> Tolerances:
    tolerances = Tolerances()
    tolerances.apply_overrides(tol or [])
    return tolerances


@command("omf list")
def omf_list(f: Optional[List[str]] = None, out: str = "-") -> ExitCode:
    """List the catalog of operator monotone functions"""
    _emit_json([describe_kind(kind) for kind in catalog(f)], out)
    return ExitCode.OK


@command("omf check")
def omf_check(
    f: Optional[List[str]] = None,
    seed: int = 0,
    trials: int = 200,
    samples: int = 10000,
    dims: List[int] = [2, 3, 4],
    tol: Optional[List[str]] = None,
    out: str = "-",
) -> ExitCode:
    """Check normalization, symmetry, bounds and sampled operator monotonicity"""
    tolerances = _tolerances(tol)
    results = {}
    violations = 0
    for kind in catalog(f):
        normalized = eval_f(kind, 1.0) == 1.0
        symmetry = check_symmetry(kind, samples, [seed, 0], tolerances.symmetry)
        bounds = check_bounds(kind, samples, [seed, 1], tolerances.bounds)
        monotone = [
            check_operator_monotone_sample(kind, dim, trials, [seed, 2, dim], tolerances.operator_monotone)
            for dim in dims
        ]
        failed = (not normalized) + symmetry["violations"] + bounds["violations"]
        failed += sum(report["violations"] for report in monotone)
        violations += failed
        if failed:
            log("%s has %d violations", kind.identifier, failed, level=LogLevel.WARNING, prefix="omf check")
        results[kind.identifier] = {
            "normalized": normalized,
            "symmetry": symmetry,
            "bounds": bounds,
            "operator_monotone": monotone,
        }
    _emit_json(
        {"kinds": results, "seed": seed, "tolerances": tolerances.model_settings(), "version": __version__}, out
    )
    return ExitCode.VIOLATION if violations else ExitCode.OK


@command("metric eval", parameters=["<kind>", "<density>", "<tangent>", "[tangent2]"])
def metric_eval(
    kind: str, density: str, tangent: str, tangent2: Optional[str] = None, floor: float = 1e-9, out: str = "-"
) -> ExitCode:
    """Evaluate a metric on tangents read from matrix JSON files"""
    d = validate_density(load_matrix(density), floor=floor)
    a = TangentVector(load_matrix(tangent))
    b = TangentVector(load_matrix(tangent2)) if tangent2 else None
    record = MetricRecord(
        kind=parse_kind(kind).identifier,
        value=metric_value(kind, d, a, b),
        sld=metric_value("sld", d, a, b),
        rld=metric_value("rld", d, a, b),
    )
    _emit_json(record, out)
    return ExitCode.OK


@command("fuzz", parameters=["<suite>"])
def fuzz(
    suite: str,
    seed: int = 0,
    trials: int = 100,
    dims: Optional[List[str]] = None,
    f: Optional[List[str]] = None,
    tol: Optional[List[str]] = None,
    workers: int = 1,
    floor: Optional[str] = None,
    out: str = "-",
) -> ExitCode:
    """Run a property fuzz suite: monotone, schwarz, ordering, classical or entropy"""
    try:
        suite_name = Suite(suite.lower())
    except ValueError:
        raise DomainError(f"Unknown suite '{suite}', known suites: {', '.join(s.value for s in Suite)}") from None
    values: Dict[str, Any] = {"seed": seed, "trials": trials, "workers": workers, "output": out}
    if dims is not None:
        values["dims"] = dims
    if f is not None:
        values["kinds"] = f
    if floor is not None:
        values["density_floor"] = floor
    config = RunConfig(tolerances=_tolerances(tol), **values)
    report = run_suite(suite_name, config)
    _emit_json(report, config.output)
    return ExitCode.VIOLATION if report["failures"] else ExitCode.OK


@command("classical distance", parameters=["<p>", "<r>"])
def classical_distance(p: str, r: str, out: str = "-") -> ExitCode:
    """Geodesic and Hellinger distance of two probability vectors"""
    pv, rv = parse_vector(p), parse_vector(r)
    distance = geodesic_distance(pv, rv)
    _emit_json(
        {
            "geodesic": distance,
            "hellinger": hellinger(pv, rv),
            "hellinger_from_geodesic": 2.0 * float(np.sin(distance / 4.0)),
        },
        out,
    )
    return ExitCode.OK


@command("bloch profile")
def bloch_profile_command(
    f: Optional[List[str]] = None, grid: List[float] = DEFAULT_RADII, tol: Optional[List[str]] = None, out: str = "-"
) -> ExitCode:
    """Radial and tangential coefficients of the Bloch ball line element as CSV"""
    tolerances = _tolerances(tol)
    rows = bloch_profile(catalog(f), grid)
    violations = 0
    for row in rows:
        if not 1e-3 < row["r"] < 1.0 - 1e-3:
            continue
        for direction in Direction:
            report = check_crosscheck(row["kind"], row["r"], direction, tolerances)
            if not report["passed"]:
                violations += 1
                log(
                    "%s %s coefficient at r=%r: evaluator %r, closed form %r",
                    report["kind"],
                    report["direction"],
                    report["r"],
                    report["general"],
                    report["formula"],
                    level=LogLevel.WARNING,
                    prefix="bloch profile",
                )
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=["r", "kind", "radial", "tangential"], lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({key: repr(value) if isinstance(value, float) else value for key, value in row.items()})
    _emit(buffer.getvalue(), out)
    return ExitCode.VIOLATION if violations else ExitCode.OK


@command("pure limit")
def pure_limit(
    f: Optional[List[str]] = None,
    eps: List[float] = DEFAULT_GRID,
    u: List[complex] = [1.0],
    weights: Optional[List[float]] = None,
    tol: Optional[List[str]] = None,
    out: str = "-",
) -> ExitCode:
    """Radial extension of the metrics to the pure states along Diag(1 - eps*sum(w), eps*w)"""
    tolerances = _tolerances(tol)
    sequence = BoundarySequence(weights=weights or [1.0] * len(u), grid=eps)
    h = fubini_study(u)
    if h == 0:
        raise DomainError("Horizontal vector u must be non-zero")

    kinds = {}
    violations = 0
    for kind in catalog(f):
        report = radial_extension_limit(kind, sequence, u, tolerance=tolerances.limit_rel)
        if not report["monotone"]:
            violations += 1
            log("%s does not approach its limit monotonically", kind.identifier, level=LogLevel.WARNING)
        entry = dict(report)
        entry["limit"] = report["limit"] if not report["divergent"] else "divergent"
        del entry["kind"]
        kinds[kind.identifier] = entry
    _emit_json(
        {
            "fubini_study": h,
            "grid": sequence.grid,
            "weights": sequence.weights,
            "u": [[value.real, value.imag] for value in u],
            "kinds": kinds,
            "tolerances": tolerances.model_settings(),
        },
        out,
    )
    return ExitCode.VIOLATION if violations else ExitCode.OK


@command
def help() -> ExitCode:
    """Show help for the commands"""
    lines = [f"{NAME} {__version__}", "", f"Usage: {NAME} [--verbose] <command> [arguments] [--flag value ...]", ""]
    for name in sorted(COMMANDS):
        cmd = COMMANDS[name]
        arguments = " ".join(cmd["parameters"] + [f"[{flag} ...]" for flag in cmd["flags"]])
        lines.append(f"  {name} {arguments}".rstrip())
        lines.append(f"      {cmd['description']}")
    sys.stdout.write("\n".join(lines) + "\n")
    return ExitCode.OK


def main(argv: Optional[List[str]] = None) -> int:
    """Run the command line

    Args:
        argv (:obj:`list` of :obj:`str`, optional): Arguments without the program name,
            defaults to :data:`sys.argv`

    Returns:
        :obj:`int`: Exit code, see :class:`monometric.types.ExitCode`
    """
    args = list(sys.argv[1:] if argv is None else argv)
    verbose = "--verbose" in args
    args = [arg for arg in args if arg != "--verbose"]
    set_verbose(verbose)

    cmd, rest = find_command(args)
    if cmd is None:
        log("Unknown command '%s', see '%s help'", " ".join(args[:2]), NAME, level=LogLevel.ERROR)
        return int(ExitCode.USAGE)

    try:
        return int(cmd["callback"](rest))
    except (MonometricError, OSError) as e:
        log("%s", e, level=LogLevel.ERROR, prefix=cmd["name"])
        return int(ExitCode.USAGE)


if __name__ == "__main__":
    sys.exit(main())
