"""Configuration module

This module provides a declarative way to define configuration. Settings are
defined once as class attributes built by field factories, and the config
object validates every assignment against them.

Example:

    .. code-block:: python

        from monometric.config import BaseConfig, Float, Int, ListInt

        class SweepConfig(BaseConfig):
            samples = Int("Samples", "Points per sweep", 100, minimum=1)
            tolerance = Float("Tolerance", default=1e-10, maximum=1.0)
            dims = ListInt("Dimensions", default=[2, 3], minimum=2, maximum=16)

        config = SweepConfig(samples=50)
        config.samples  # 50
        config.samples = 0  # raises ConfigError

Note:
    Reading a field attribute returns its current value, not the :class:`Field`.
    Values given as strings (e.g. from the command line) are parsed according
    to the field type before they are validated.
"""

from typing import Any, Callable, Dict, List, Optional, Sequence

from .errors import ConfigError
from .functions import DEFAULT_KINDS, parse_kind
from .types import Settings, SettingType

__all__ = [
    "BaseConfig",
    "Field",
    "String",
    "Int",
    "Float",
    "Bool",
    "ListInt",
    "ListFloat",
    "ListString",
    "Tolerances",
    "RunConfig",
]

_TRUE = {"true", "t", "yes", "y", "1"}
_FALSE = {"false", "f", "no", "n", "0"}


class BaseConfig:
    """Base class for configuration

    Subclasses declare their settings as class attributes built with the field
    factories of this module. Fields are collected through the whole class
    hierarchy.

    Args:
        **values (:obj:`typing.Any`): Initial values overriding the defaults

    Attributes:
        model_fields (:obj:`dict`): Field objects by setting name
        model_values (:obj:`dict`): Current, validated values by setting name

    Raises:
        ConfigError: If a value is invalid or a name is unknown
    """

    def __init__(self, **values: Any) -> None:
        fields: Dict[str, Field] = {}

        def get_fields(cls: Any) -> None:
            for name, field in cls.__dict__.items():
                if isinstance(field, Field):
                    if name in fields:
                        continue  # overridden in a subclass
                    if not field.name:
                        field.name = name
                    fields[name] = field
            for base in cls.__bases__:
                get_fields(base)

        get_fields(self.__class__)

        self.model_fields = fields
        self.model_values = {name: field.from_value(field.default) for name, field in fields.items()}

        for name, value in values.items():
            if name not in fields:
                raise ConfigError(f"Unknown setting '{name}' for {self.__class__.__name__}")
            setattr(self, name, value)

    def __getattribute__(self, name: str) -> Any:
        """Get the value of a setting or the attribute"""
        try:
            fields = super().__getattribute__("model_fields")
        except AttributeError:
            fields = {}

        if name in fields:
            return super().__getattribute__("model_values")[name]

        return super().__getattribute__(name)

    def __setattr__(self, name: str, value: Any) -> None:
        """Set the value of a setting or the attribute

        Setting values are parsed and validated before they are stored.
        """
        try:
            fields = super().__getattribute__("model_fields")
        except AttributeError:
            fields = {}

        if name in fields:
            super().__getattribute__("model_values")[name] = fields[name].from_value(value)
            return

        super().__setattr__(name, value)

    def model_settings(self) -> Settings:
        """Convert the model to settings

        Returns:
            :obj:`monometric.types.Settings`: The current values by setting name
        """
        return {name: self.model_values[name] for name in sorted(self.model_fields)}

    def apply_overrides(self, overrides: Sequence[str]) -> List[str]:
        """Apply ``name=value`` overrides

        Args:
            overrides (:obj:`list` of :obj:`str`): Overrides in the form ``name=value``

        Returns:
            :obj:`list` of :obj:`str`: The names of the settings that were changed

        Raises:
            ConfigError: If an override is malformed, names an unknown setting
                or has an invalid value
        """
        changed = []
        for override in overrides:
            name, sep, value = override.partition("=")
            name = name.strip()
            if not sep or not name:
                raise ConfigError(f"Invalid override '{override}', expected name=value")
            if name not in self.model_fields:
                known = ", ".join(sorted(self.model_fields))
                raise ConfigError(f"Unknown setting '{name}', known settings: {known}")
            setattr(self, name, value.strip())
            changed.append(name)
        return changed


class Field:
    """A configuration field

    Args:
        label (:obj:`str`): The label of the setting.
        default (:obj:`typing.Any`): The default value of the setting.
        type (:obj:`monometric.types.SettingType`): The type of the setting.
        description (:obj:`str`, optional): The description of the setting.
        name (:obj:`str`, optional): The name of the setting. Does not need to
            be provided. By default it will use the variable name.
        validate (:obj:`typing.Callable`, optional): Additional validation run
            on the parsed value, it returns the value to store.
        **options (:obj:`typing.Any`): Additional options such as ``minimum`` and ``maximum``.

    Attributes:
        name (:obj:`str`): The name of the setting.
        label (:obj:`str`): The label of the setting.
        description (:obj:`str`): The description of the setting.
        default (:obj:`typing.Any`): The default value of the setting.
        type (:obj:`monometric.types.SettingType`): The type of the setting.
        options (:obj:`typing.Any`): Additional options for the setting.
    """

    def __init__(
        self,
        label: str,
        default: Any,
        type: SettingType,
        description: Optional[str] = "",
        name: Optional[str] = None,
        validate: Optional[Callable[[Any, "Field"], Any]] = None,
        **options: Any,
    ) -> None:
        self.name = name or ""  # If not provided it will later be set by the BaseConfig
        self.label = label
        self.description = description
        self.default = default
        self.type = type
        self.options = options

        self.validate_func = validate

    def _parse_scalar(self, value: Any, kind: type) -> Any:
        if kind is bool:
            if isinstance(value, bool):
                return value
            text = str(value).strip().lower()
            if text in _TRUE:
                return True
            if text in _FALSE:
                return False
            raise ConfigError(f"Invalid boolean value for '{self.name}': {value!r}")

        if isinstance(value, bool) and kind is not str:
            raise ConfigError(f"Invalid {kind.__name__} value for '{self.name}': {value!r}")
        if kind is int and isinstance(value, float) and not value.is_integer():
            raise ConfigError(f"Invalid int value for '{self.name}': {value!r}")
        try:
            parsed = kind(value.strip() if isinstance(value, str) else value)
        except (TypeError, ValueError) as e:
            raise ConfigError(f"Invalid {kind.__name__} value for '{self.name}': {value!r}") from e

        if kind in (int, float):
            minimum = self.options.get("minimum")
            maximum = self.options.get("maximum")
            if parsed != parsed:
                raise ConfigError(f"Invalid {kind.__name__} value for '{self.name}': {value!r}")
            if minimum is not None and parsed < minimum:
                raise ConfigError(f"Value {parsed} for '{self.name}' is below the minimum {minimum}")
            if maximum is not None and parsed > maximum:
                raise ConfigError(f"Value {parsed} for '{self.name}' is above the maximum {maximum}")
        return parsed

    def from_value(self, value: Any) -> Any:
        """Parse and validate a value for this setting

        Args:
            value (:obj:`typing.Any`): The value, a string is parsed according to the type

        Returns:
            :obj:`typing.Any`: The value to store

        Raises:
            ConfigError: If the value is invalid
        """
        scalar_types = {
            SettingType.INT: int,
            SettingType.FLOAT: float,
            SettingType.BOOL: bool,
            SettingType.STR: str,
        }
        list_types = {
            SettingType.LIST_INT: int,
            SettingType.LIST_FLOAT: float,
            SettingType.LIST_STRING: str,
        }

        parsed: Any
        if self.type in scalar_types:
            parsed = self._parse_scalar(value, scalar_types[self.type])
        else:
            items = [item for item in value.split(",") if item.strip()] if isinstance(value, str) else list(value)
            if not items and not self.options.get("allow_empty", False):
                raise ConfigError(f"Setting '{self.name}' must not be empty")
            parsed = [self._parse_scalar(item, list_types[self.type]) for item in items]

        if self.validate_func:
            return self.validate_func(parsed, self)
        return parsed


def String(
    label: str,
    description: Optional[str] = "",
    default: str = "",
    name: Optional[str] = None,
    validate: Optional[Callable[[Any, Field], Any]] = None,
) -> str:
    """A configuration field for a string

    Args:
        label (str): The label of the setting.
        description (:obj:`str`, optional): The description of the setting. Defaults to "".
        default (:obj:`str`, optional): The default value of the setting.
            Defaults to "".
        name (:obj:`str`, optional): The name of the setting.
        validate (:obj:`typing.Callable`, optional): Additional validation.

    Returns:
        :obj:`str`: A field object which will be replaced by the value of the
            setting on config initialization
    """
    return Field(
        label=label, description=description, default=default, type=SettingType.STR, name=name, validate=validate
    )  # type: ignore[return-value]


def Int(
    label: str,
    description: Optional[str] = "",
    default: int = 0,
    name: Optional[str] = None,
    maximum: Optional[int] = None,
    minimum: Optional[int] = 0,
) -> int:
    """A configuration field for an integer

    Args:
        label (str): The label of the setting.
        description (:obj:`str`, optional): The description of the setting. Defaults to "".
        default (:obj:`int`, optional): The default value of the setting.
            Defaults to 0.
        name (:obj:`str`, optional): The name of the setting.
        maximum (:obj:`int`, optional): The maximum value of the setting.
            Defaults to no limit.
        minimum (:obj:`int`, optional): The minimum value of the setting.
            Defaults to 0.

    Returns:
        :obj:`int`: A field object which will be replaced by the value of the
            setting on config initialization
    """
    return Field(
        label=label,
        description=description,
        default=default,
        type=SettingType.INT,
        name=name,
        maximum=maximum,
        minimum=minimum,
    )  # type: ignore[return-value]


def Float(
    label: str,
    description: Optional[str] = "",
    default: float = 0.0,
    name: Optional[str] = None,
    maximum: Optional[float] = None,
    minimum: Optional[float] = 0.0,
) -> float:
    """A configuration field for a float

    Args:
        label (str): The label of the setting.
        description (:obj:`str`, optional): The description of the setting. Defaults to "".
        default (:obj:`float`, optional): The default value of the setting.
            Defaults to 0.0.
        name (:obj:`str`, optional): The name of the setting.
        maximum (:obj:`float`, optional): The maximum value of the setting.
            Defaults to no limit.
        minimum (:obj:`float`, optional): The minimum value of the setting.
            Defaults to 0.0.

    Returns:
        :obj:`float`: A field object which will be replaced by the value of the
            setting on config initialization
    """
    return Field(
        label=label,
        description=description,
        default=default,
        type=SettingType.FLOAT,
        name=name,
        maximum=maximum,
        minimum=minimum,
    )  # type: ignore[return-value]


def Bool(label: str, description: Optional[str] = "", default: bool = False, name: Optional[str] = None) -> bool:
    """A configuration field for a boolean flag

    Args:
        label (str): The label of the setting.
        description (:obj:`str`, optional): The description of the setting. Defaults to "".
        default (:obj:`bool`, optional): The default value of the setting. Defaults to False.
        name (:obj:`str`, optional): The name of the setting.

    Returns:
        :obj:`bool`: A field object which will be replaced by the value of the
            setting on config initialization
    """
    return Field(  # type: ignore[return-value]
        label=label, description=description, default=default, type=SettingType.BOOL, name=name
    )


def ListInt(
    label: str,
    description: Optional[str] = "",
    default: List[int] = [],
    name: Optional[str] = None,
    maximum: Optional[int] = None,
    minimum: Optional[int] = None,
) -> List[int]:
    """A configuration field for a list of integers

    Every item is checked against ``minimum`` and ``maximum``. Strings are split on commas.

    Args:
        label (str): The label of the setting.
        description (:obj:`str`, optional): The description of the setting. Defaults to "".
        default (:obj:`list` of :obj:`int`, optional): The default value of the setting.
        name (:obj:`str`, optional): The name of the setting.
        maximum (:obj:`int`, optional): The maximum value of every item.
        minimum (:obj:`int`, optional): The minimum value of every item.

    Returns:
        :obj:`list` of :obj:`int`: A field object which will be replaced by
            the value of the setting on config initialization
    """
    return Field(
        label=label,
        description=description,
        default=list(default),
        type=SettingType.LIST_INT,
        name=name,
        maximum=maximum,
        minimum=minimum,
    )  # type: ignore[return-value]


def ListFloat(
    label: str,
    description: Optional[str] = "",
    default: List[float] = [],
    name: Optional[str] = None,
    maximum: Optional[float] = None,
    minimum: Optional[float] = None,
) -> List[float]:
    """A configuration field for a list of floats

    Args:
        label (str): The label of the setting.
        description (:obj:`str`, optional): The description of the setting. Defaults to "".
        default (:obj:`list` of :obj:`float`, optional): The default value of the setting.
        name (:obj:`str`, optional): The name of the setting.
        maximum (:obj:`float`, optional): The maximum value of every item.
        minimum (:obj:`float`, optional): The minimum value of every item.

    Returns:
        :obj:`list` of :obj:`float`: A field object which will be replaced by
            the value of the setting on config initialization
    """
    return Field(
        label=label,
        description=description,
        default=list(default),
        type=SettingType.LIST_FLOAT,
        name=name,
        maximum=maximum,
        minimum=minimum,
    )  # type: ignore[return-value]


def ListString(
    label: str,
    description: Optional[str] = "",
    default: List[str] = [],
    name: Optional[str] = None,
    validate: Optional[Callable[[Any, Field], Any]] = None,
) -> List[str]:
    """A configuration field for a list of strings

    Args:
        label (str): The label of the setting.
        description (:obj:`str`, optional): The description of the setting. Defaults to "".
        default (:obj:`list` of :obj:`str`, optional): The default value of the setting.
        name (:obj:`str`, optional): The name of the setting.
        validate (:obj:`typing.Callable`, optional): Additional validation.

    Returns:
        :obj:`list` of :obj:`str`: A field object which will be replaced by
            the value of the setting on config initialization
    """
    return Field(
        label=label,
        description=description,
        default=list(default),
        type=SettingType.LIST_STRING,
        name=name,
        validate=validate,
    )  # type: ignore[return-value]


def _validate_kinds(value: List[str], field: Field) -> List[str]:
    kinds = []
    for item in value:
        try:
            kinds.append(parse_kind(item).identifier)
        except ValueError as e:
            raise ConfigError(f"Invalid value for '{field.name}': {e}") from e
    return kinds


class Tolerances(BaseConfig):
    """Named tolerances used by checks and fuzz suites

    Every tolerance can be overridden on the command line with
    ``--tol name=value``.

    Example:

        .. code-block:: python

            tolerances = Tolerances()
            tolerances.apply_overrides(["contraction_rel=1e-6"])
    """

    contraction_rel = Float("Contraction", "Relative slack of metric contraction", 1e-8, maximum=1.0)
    contraction_abs = Float("Contraction (absolute)", "Absolute slack of metric contraction", 1e-10, maximum=1.0)
    ordering_rel = Float("Ordering", "Relative slack of SLD <= kind <= RLD", 1e-10, maximum=1.0)
    schwarz = Float("Schwarz", "Allowed negative eigenvalue in the Schwarz inequality", 1e-8, maximum=1.0)
    operator_monotone = Float("Operator monotone", "Allowed negative eigenvalue of f(H) - f(K)", 1e-8, maximum=1.0)
    symmetry = Float("Symmetry", "Relative tolerance of f(t) = t f(1/t)", 1e-10, maximum=1.0)
    bounds = Float("Bounds", "Tolerance of the harmonic and arithmetic mean bounds", 1e-10, maximum=1.0)
    unitary_rel = Float("Unitary invariance", "Relative tolerance of unitary invariance", 1e-9, maximum=1.0)
    entropy_abs = Float("Relative entropy", "Absolute slack of relative entropy contraction", 1e-9, maximum=1.0)
    crosscheck_rel = Float("Cross check", "Relative tolerance between independent evaluations", 1e-9, maximum=1.0)
    limit_rel = Float("Boundary limit", "Relative tolerance of the radial extension limit", 1e-5, maximum=1.0)
    output_floor = Float("Output floor", "Smallest eigenvalue accepted for channel outputs", 1e-12, maximum=0.1)
    floor_mixing = Float("Floor mixing", "Weight of I/n mixed into singular outputs", 1e-10, maximum=0.1)


class RunConfig(BaseConfig):
    """Configuration of a fuzz run

    Attributes:
        tolerances (:class:`Tolerances`): Tolerances of the run
    """

    seed = Int("Seed", "Base seed, per trial streams are derived from it", 0, maximum=2**32 - 1)
    trials = Int("Trials", "Number of trials", 100, minimum=1)
    dims = ListInt("Dimensions", "Matrix dimensions to sample from", [2, 3, 4], minimum=2, maximum=16)
    kinds = ListString("Kinds", "Catalog identifiers", DEFAULT_KINDS, validate=_validate_kinds)
    output = String("Output", "Output path, - for standard output", "-")
    workers = Int("Workers", "Number of worker threads", 1, minimum=1, maximum=64)
    density_floor = Float("Density floor", "Smallest eigenvalue of sampled densities", 1e-9, maximum=0.01)

    def __init__(self, tolerances: Optional[Tolerances] = None, **values: Any) -> None:
        super().__init__(**values)
        self.tolerances = tolerances or Tolerances()
