import csv
import io
import json
import math

import pytest

from monometric import bloch
from monometric.cli import main
from monometric.functions import DEFAULT_KINDS
from monometric.hermitian import dump_matrix


@pytest.fixture
def matrices(tmp_path):
    density = tmp_path / "density.json"
    tangent = tmp_path / "tangent.json"
    dump_matrix([[0.75, 0], [0, 0.25]], density)
    dump_matrix([[0, 1], [1, 0]], tangent)
    return str(density), str(tangent)


def run(capsys, *args):
    code = main(list(args))
    return code, capsys.readouterr().out


def run_json(capsys, *args):
    code, out = run(capsys, *args)
    return code, json.loads(out)


def test_metric_eval(capsys, matrices):
    code, record = run_json(capsys, "metric", "eval", "km", *matrices)
    assert code == 0
    assert record["kind"] == "km"
    assert record["value"] == pytest.approx(4 * math.log(3))
    assert record["sld"] == pytest.approx(4.0)
    assert record["rld"] == pytest.approx(16 / 3)


def test_metric_eval_second_tangent(capsys, matrices, tmp_path):
    other = tmp_path / "other.json"
    dump_matrix([[0.5, 0], [0, -0.5]], other)
    code, record = run_json(capsys, "metric", "eval", "wyd:1", *matrices, str(other))
    assert code == 0
    assert record["kind"] == "km"
    assert record["value"] == pytest.approx(0.0, abs=1e-15)


def test_metric_eval_to_file(capsys, matrices, tmp_path):
    out = tmp_path / "record.json"
    code, stdout = run(capsys, "metric", "eval", "sld", *matrices, "--out", str(out))
    assert code == 0
    assert stdout == ""
    assert json.loads(out.read_text())["value"] == pytest.approx(4.0)


def test_metric_eval_rejects_malformed_json(capsys, matrices, tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    assert main(["metric", "eval", "sld", str(broken), matrices[1]]) == 2


def test_metric_eval_rejects_unknown_kind(capsys, matrices):
    assert main(["metric", "eval", "bogus", *matrices]) == 2


@pytest.mark.parametrize("args", [["sld", "missing.json", "missing.json"], ["sld"], ["sld", "a", "b", "c", "d"]])
def test_metric_eval_usage_errors(capsys, args):
    assert main(["metric", "eval", *args]) == 2


@pytest.mark.parametrize(
    "entries",
    [[[1, 2], [0, 1]], [[0, 2], [0, 0]], [[1, 0], [0, 1]], [[0.5, 1j], [-1j, 0.5]]],
    ids=["not-hermitian", "not-hermitian-traceless", "trace-two", "hermitian-trace-one"],
)
@pytest.mark.parametrize("position", ["tangent", "tangent2"])
def test_metric_eval_rejects_invalid_tangent(capsys, matrices, tmp_path, entries, position):
    invalid = tmp_path / "invalid.json"
    dump_matrix(entries, invalid)
    density, tangent = matrices
    args = [density, str(invalid)] if position == "tangent" else [density, tangent, str(invalid)]
    assert main(["metric", "eval", "sld", *args]) == 2
    assert capsys.readouterr().out == ""


def test_metric_eval_rejects_singular_density(capsys, tmp_path, matrices):
    pure = tmp_path / "pure.json"
    dump_matrix([[1, 0], [0, 0]], pure)
    assert main(["metric", "eval", "sld", str(pure), matrices[1]]) == 2


def test_fuzz(capsys):
    args = ["fuzz", "ordering", "--seed", "3", "--trials", "4", "--floor", "1e-3", "--f", "sld,km"]
    code, out = run(capsys, *args)
    assert code == 0
    report = json.loads(out)
    assert report["failures"] == 0
    assert report["passes"] == 8
    assert report["kinds"] == ["sld", "km"]
    assert run(capsys, *args)[1] == out


def test_fuzz_workers_and_tolerances(capsys):
    code, report = run_json(
        capsys, "fuzz", "classical", "--trials", "5", "--workers", "2", "--tol", "contraction_rel=1e-6", "--dims", "3"
    )
    assert code == 0
    assert report["dims"] == [3]
    assert report["tolerances"]["contraction_rel"] == 1e-6


@pytest.mark.parametrize(
    "args",
    [
        ["fuzz", "ordering", "--dims", "17"],
        ["fuzz", "bogus"],
        ["fuzz", "ordering", "--tol", "unknown=1"],
        ["fuzz", "ordering", "--trials", "many"],
        ["fuzz", "ordering", "--f", "wyd:5"],
    ],
)
def test_fuzz_usage_errors(capsys, args):
    assert main(args) == 2


def test_unknown_command(capsys):
    assert main(["frobnicate"]) == 2
    assert main([]) == 2


def test_bloch_profile(capsys):
    code, out = run(capsys, "bloch", "profile", "--f", "sld,km", "--grid", "0.5")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [row["kind"] for row in rows] == ["sld", "km"]
    assert float(rows[0]["radial"]) == pytest.approx(4 / 3)
    assert float(rows[0]["tangential"]) == pytest.approx(1.0)
    assert float(rows[1]["tangential"]) == pytest.approx(math.log(3))


def test_bloch_profile_default_grid(capsys):
    code, out = run(capsys, "bloch", "profile")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "r,kind,radial,tangential"
    assert len(lines) == 1 + 9 * len(DEFAULT_KINDS)


def test_bloch_profile_crosscheck_disagreement(capsys, monkeypatch):
    evaluate = bloch.metric_value
    monkeypatch.setattr(bloch, "metric_value", lambda *args: evaluate(*args) * (1 + 1e-6))
    code, out = run(capsys, "bloch", "profile", "--f", "sld", "--grid", "0.5")
    assert code == 1
    assert out.splitlines()[0] == "r,kind,radial,tangential"
    args = ["bloch", "profile", "--f", "sld", "--grid", "0.5", "--tol", "crosscheck_rel=1e-5"]
    assert run(capsys, *args)[0] == 0


@pytest.mark.parametrize("grid", ["", "0,0.5", "0.5,1"])
def test_bloch_profile_rejects_grid(capsys, grid):
    assert main(["bloch", "profile", "--grid", grid]) == 2


def test_pure_limit(capsys):
    code, document = run_json(capsys, "pure", "limit", "--f", "sld,km,wyd:0")
    assert code == 0
    assert document["fubini_study"] == 2.0
    assert document["u"] == [[1.0, 0.0]]
    assert document["kinds"]["sld"]["limit"] == pytest.approx(4.0)
    assert document["kinds"]["sld"]["converged"]
    assert document["kinds"]["wyd:0"]["limit"] == pytest.approx(8.0)
    assert document["kinds"]["km"]["limit"] == "divergent"
    assert document["kinds"]["km"]["divergent"]


def test_pure_limit_complex_direction(capsys):
    args = ["pure", "limit", "--f", "sld", "--u", "1,0.5i", "--weights", "1,2", "--eps", "1e-2,1e-4,1e-6"]
    code, document = run_json(capsys, *args)
    assert code == 0
    assert document["fubini_study"] == pytest.approx(2.5)
    assert document["grid"] == [1e-2, 1e-4, 1e-6]
    assert document["kinds"]["sld"]["limit"] == pytest.approx(5.0)


@pytest.mark.parametrize(
    "args",
    [
        ["pure", "limit", "--u", "0"],
        ["pure", "limit", "--eps", "1e-4,1e-2"],
        ["pure", "limit", "--u", "1", "--weights", "1,1"],
    ],
)
def test_pure_limit_usage_errors(capsys, args):
    assert main(args) == 2


def test_classical_distance(capsys):
    code, document = run_json(capsys, "classical", "distance", "1,0", "[0.5, 0.5]")
    assert code == 0
    assert document["geodesic"] == pytest.approx(math.pi / 2)
    assert document["hellinger"] == pytest.approx(0.765367, abs=1e-6)
    assert document["hellinger_from_geodesic"] == pytest.approx(document["hellinger"])


@pytest.mark.parametrize("r", ["0.5,abc", "0.5,0.6", "0.2,0.3,0.5"])
def test_classical_distance_rejects(capsys, r):
    assert main(["classical", "distance", "0.5,0.5", r]) == 2


def test_omf_list(capsys):
    code, kinds = run_json(capsys, "omf", "list")
    assert code == 0
    assert [kind["identifier"] for kind in kinds] == DEFAULT_KINDS
    code, kinds = run_json(capsys, "omf", "list", "--f", "wyd:1,wyd:0")
    assert [kind["identifier"] for kind in kinds] == ["km", "wyd:0"]


def test_omf_check(capsys):
    args = ["omf", "check", "--f", "sld,km", "--samples", "200", "--trials", "20", "--dims", "2,3"]
    code, document = run_json(capsys, *args)
    assert code == 0
    assert sorted(document["kinds"]) == ["km", "sld"]
    assert document["kinds"]["km"]["normalized"]
    assert len(document["kinds"]["km"]["operator_monotone"]) == 2


def test_help(capsys):
    code, out = run(capsys, "help")
    assert code == 0
    for name in ("metric eval", "fuzz", "bloch profile", "pure limit", "classical distance", "omf list"):
        assert name in out


def test_verbose_flag(capsys):
    code, kinds = run_json(capsys, "--verbose", "omf", "list", "--f", "sld")
    assert code == 0
    assert kinds[0]["identifier"] == "sld"
