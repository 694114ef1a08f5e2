import pytest

from monometric import fuzz
from monometric.config import RunConfig, Tolerances
from monometric.functions import DEFAULT_KINDS
from monometric.fuzz import SUITES, Outcome, run_suite
from monometric.info import __version__
from monometric.types import Suite


def config(**values):
    values.setdefault("trials", 12)
    values.setdefault("density_floor", 1e-3)
    return RunConfig(**values)


@pytest.mark.parametrize("suite", [suite.value for suite in Suite])
def test_suites_hold(suite):
    report = run_suite(suite, config(seed=11))
    assert report["failures"] == 0
    assert report["passes"] > 0
    assert report["suite"] == suite
    assert report["seed"] == 11
    assert report["trials"] == 12
    assert report["version"] == __version__


@pytest.mark.parametrize("suite", ["monotone", "entropy"])
def test_reports_are_deterministic(suite):
    first = run_suite(suite, config(seed=5))
    assert run_suite(suite, config(seed=5)) == first
    assert run_suite(suite, config(seed=5, workers=3)) == first


def test_seed_changes_the_trials():
    first = run_suite("ordering", config(seed=1, kinds=["km"]))
    second = run_suite("ordering", config(seed=2, kinds=["km"]))
    assert first["worst_margin"] != second["worst_margin"]


def test_ordering_counts():
    report = run_suite("ordering", config(trials=7))
    assert report["passes"] == 7 * len(DEFAULT_KINDS)
    assert report["skips"] == 0
    assert report["worst_margin"] == pytest.approx(0.0, abs=1e-9)


def test_monotone_counts_trace_checks():
    report = run_suite("monotone", config(trials=5, kinds=["sld", "km"]))
    assert report["passes"] + report["skips"] == 5 * 3


def test_single_check_suites():
    schwarz = run_suite("schwarz", config(trials=6))
    assert schwarz["passes"] + schwarz["skips"] == 6
    assert run_suite("classical", config(trials=6))["passes"] == 6
    entropy = run_suite("entropy", config(trials=6))
    assert entropy["passes"] + entropy["skips"] == 12


def test_kinds_field():
    kinds = ["sld", "wyd:1", "wyd:0.50"]
    assert run_suite("ordering", config(kinds=kinds))["kinds"] == ["sld", "km", "wyd:0.5"]
    assert run_suite("monotone", config(trials=2, kinds=kinds))["kinds"] == ["sld", "km", "wyd:0.5"]
    assert run_suite("schwarz", config(trials=2, kinds=kinds))["kinds"] == []
    assert run_suite("classical", config(trials=2))["kinds"] == []


def test_report_carries_configuration():
    tolerances = Tolerances(contraction_rel=1e-6)
    report = run_suite("classical", RunConfig(tolerances=tolerances, trials=3, dims=[3, 5]))
    assert report["dims"] == [3, 5]
    assert report["tolerances"]["contraction_rel"] == 1e-6
    assert sorted(report["tolerances"]) == sorted(Tolerances().model_fields)


def test_dimensions_cycle(monkeypatch):
    seen = []

    def trial(config, index):
        seen.append(fuzz._dimension(config, index))
        return [Outcome("dim", "pass")]

    monkeypatch.setitem(SUITES, Suite.ORDERING, trial)
    run_suite("ordering", config(trials=5, dims=[2, 4]))
    assert seen == [2, 4, 2, 4, 2]


def test_failures_are_counted(monkeypatch):
    def trial(config, index):
        return [Outcome("fake", "fail", -0.5, "made up"), Outcome("fake", "skip"), Outcome("fake", "pass", 0.25)]

    monkeypatch.setitem(SUITES, Suite.SCHWARZ, trial)
    report = run_suite("schwarz", config(trials=4))
    assert (report["passes"], report["failures"], report["skips"]) == (4, 4, 4)
    assert report["worst_margin"] == -0.5


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("bogus", config())
