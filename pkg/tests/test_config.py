import pytest

from monometric.config import BaseConfig, Bool, Float, Int, ListFloat, RunConfig, String, Tolerances
from monometric.errors import ConfigError
from monometric.functions import DEFAULT_KINDS


class SampleConfig(BaseConfig):
    name = String("Name", "A name", "sample")
    count = Int("Count", "A count", 3, minimum=1, maximum=10)
    scale = Float("Scale", default=0.5, maximum=1.0)
    enabled = Bool("Enabled")
    grid = ListFloat("Grid", default=[0.1, 0.2], minimum=0.0, maximum=1.0)


def test_defaults():
    config = SampleConfig()
    values = (config.name, config.count, config.scale, config.enabled, config.grid)
    assert values == ("sample", 3, 0.5, False, [0.1, 0.2])
    assert config.model_settings() == {
        "count": 3,
        "enabled": False,
        "grid": [0.1, 0.2],
        "name": "sample",
        "scale": 0.5,
    }


def test_strings_are_parsed():
    config = SampleConfig(count="7", scale=" 0.25 ", enabled="yes", grid="0.3, 0.4,")
    assert (config.count, config.scale, config.enabled, config.grid) == (7, 0.25, True, [0.3, 0.4])


@pytest.mark.parametrize(
    "name, value",
    [
        ("count", 0),
        ("count", 11),
        ("count", 2.5),
        ("count", "abc"),
        ("count", True),
        ("scale", -0.1),
        ("scale", "nan"),
        ("scale", 2),
        ("enabled", "maybe"),
        ("grid", ""),
        ("grid", [0.5, 1.5]),
    ],
)
def test_invalid_values(name, value):
    config = SampleConfig()
    with pytest.raises(ConfigError):
        setattr(config, name, value)


def test_unknown_setting():
    with pytest.raises(ConfigError):
        SampleConfig(size=3)


def test_list_defaults_are_not_shared():
    first = SampleConfig()
    first.grid.append(0.9)
    assert SampleConfig().grid == [0.1, 0.2]


def test_apply_overrides():
    tolerances = Tolerances()
    assert tolerances.apply_overrides(["contraction_rel=1e-6", " schwarz = 1e-7 "]) == ["contraction_rel", "schwarz"]
    assert tolerances.contraction_rel == 1e-6
    assert tolerances.schwarz == 1e-7
    assert Tolerances().contraction_rel == 1e-8


@pytest.mark.parametrize("override", ["contraction_rel", "=1e-6", "unknown=1", "contraction_rel=2", "schwarz=-1"])
def test_apply_overrides_rejects(override):
    with pytest.raises(ConfigError):
        Tolerances().apply_overrides([override])


def test_tolerance_defaults():
    tolerances = Tolerances()
    assert tolerances.contraction_rel == 1e-8
    assert tolerances.ordering_rel == 1e-10
    assert tolerances.limit_rel == 1e-5
    assert tolerances.output_floor == 1e-12


def test_run_config_defaults():
    config = RunConfig()
    assert config.seed == 0
    assert config.trials == 100
    assert config.dims == [2, 3, 4]
    assert config.kinds == DEFAULT_KINDS
    assert config.workers == 1
    assert isinstance(config.tolerances, Tolerances)
    assert RunConfig().tolerances is not config.tolerances


def test_run_config_kinds_are_canonical():
    assert RunConfig(kinds="SLD,wyd:-1,sqrt:0.0").kinds == ["sld", "km", "sqrt:0"]


@pytest.mark.parametrize(
    "values",
    [
        {"dims": [17]},
        {"dims": "1,2"},
        {"dims": ""},
        {"kinds": ["bogus"]},
        {"kinds": "wyd:3"},
        {"seed": -1},
        {"seed": 2**32},
        {"trials": 0},
        {"workers": 65},
        {"density_floor": 0.5},
    ],
)
def test_run_config_rejects(values):
    with pytest.raises(ConfigError):
        RunConfig(**values)
