"""Module for defining command line commands

This module provides a decorator that registers a function as a command of
the ``monometric`` command line. Arguments are parsed according to the
function's annotations, positional parameters first, then ``--flag value``
pairs for every parameter with a default.

Example:

    .. code-block:: python

        from monometric.command import command
        from monometric.types import ExitCode

        @command(parameters=["<name>", "[times]"])
        def greet(name: str, times: int = 1, loud: bool = False) -> ExitCode:
            \"""Greet someone\"""
            ...
            return ExitCode.OK

        # monometric greet World 2 --loud true

        @command("omf list", description="Via decorator instead of docstring")
        def omf_list(f: Optional[List[str]] = None) -> ExitCode:
            ...

        # monometric omf list --f sld,km

Note:
    * The command name is extracted from the function name by default, underscores become hyphens
    * The command description is extracted from the function's docstring by default
    * A flag given several times extends list parameters and replaces scalar ones
    * Boolean flags may be given without a value

    .. seealso:: :func:`monometric.command.command` for more information on the parameters
"""

import inspect
import re
from functools import wraps
from typing import Any, Callable, Dict, List, Optional, Tuple, TypeVar, Union, get_args, get_origin, overload

try:
    from types import NoneType  # type: ignore[attr-defined]  # Added in Python 3.10
except ImportError:
    NoneType = type(None)

from .errors import UsageError
from .logging import LOGGER
from .types import Command, CommandCallback, Commands, ExitCode

__all__ = ["command", "COMMANDS", "find_command"]

COMMANDS: Commands = {}
"""Registry of all commands by name"""

_TRUE = {"true", "t", "yes", "y", "1"}
_FALSE = {"false", "f", "no", "n", "0"}


def _parse_according_to_annotation(annotation: Any, value: Any) -> Any:
    """Parse a value according to the given annotation (basic data types)

    Supported annotations:
        * str
        * int
        * float
        * complex
        * bool
        * list
        * tuple
        * Union
        * NoneType

    Args:
        annotation (:obj:`typing.Any`): Annotation to be used for parsing (type hint)
        value (:obj:`typing.Any`): Value to be parsed

    Returns:
        :obj:`typing.Any`: Parsed value

    Raises:
        ValueError: If the value does not fit the annotation
    """
    origin = get_origin(annotation) or annotation
    args = get_args(annotation)

    if annotation is inspect.Parameter.empty:
        return value
    elif origin in [str, int, float]:
        return origin(value)
    elif origin is complex:
        return complex(value.replace(" ", "").replace("i", "j"))
    elif annotation is bool:
        if value.lower() in _TRUE:
            return True
        elif value.lower() in _FALSE:
            return False
        raise ValueError(f"Invalid boolean value: {value}")
    elif origin in [list, tuple]:
        items = [item for item in value.split(",") if item.strip()]
        parsed_items = []
        for item in items:
            for arg in args or (str,):
                try:
                    parsed_items.append(_parse_according_to_annotation(arg, item.strip()))
                    break
                except ValueError:
                    continue
            else:
                raise ValueError(f"Invalid value: {value}, could not parse item: {item}")
        return origin(parsed_items)
    elif origin is Union:
        for arg in args:
            try:
                return _parse_according_to_annotation(arg, value)
            except ValueError:
                continue
        raise ValueError(f"Invalid value: {value}")
    elif origin is NoneType:
        if value.lower() in {"none", "null", "nil", ""}:
            return None
        raise ValueError(f"Invalid None value: {value}")
    raise ValueError(f"Unsupported annotation {annotation!r}")


def _is_list(annotation: Any) -> bool:
    origin = get_origin(annotation)
    if origin is Union:
        return any(_is_list(arg) for arg in get_args(annotation))
    return origin in (list, tuple)


def _is_bool(annotation: Any) -> bool:
    return annotation is bool or (get_origin(annotation) is Union and bool in get_args(annotation))


def _split_arguments(
    name: str, args: List[str], flag_parameters: Dict[str, inspect.Parameter]
) -> Tuple[List[str], Dict[str, List[str]]]:
    positional: List[str] = []
    flags: Dict[str, List[str]] = {}
    index = 0
    while index < len(args):
        arg = args[index]
        index += 1
        if not arg.startswith("--") or len(arg) == 2:
            positional.append(arg)
            continue

        flag, sep, value = arg[2:].partition("=")
        key = flag.replace("-", "_")
        if key not in flag_parameters:
            known = ", ".join(f"--{known.replace('_', '-')}" for known in flag_parameters) or "none"
            raise UsageError(f'Unknown flag "--{flag}" for command "{name}", known flags: {known}')
        if not sep:
            if _is_bool(flag_parameters[key].annotation) and (index >= len(args) or args[index].startswith("--")):
                value = "true"
            elif index < len(args):
                value = args[index]
                index += 1
            else:
                raise UsageError(f'Flag "--{flag}" of command "{name}" needs a value')
        flags.setdefault(key, []).append(value)
    return positional, flags


F = TypeVar("F", bound=Callable[..., ExitCode])
"""Type variable for the decorated function"""


@overload
def command(
    *, description: Optional[str] = None, parameters: List[str] = []
) -> Callable[[F], CommandCallback]: ...


@overload
def command(
    func_or_name: F, *, description: Optional[str] = None, parameters: List[str] = []
) -> CommandCallback: ...


@overload
def command(
    func_or_name: str, *, description: Optional[str] = None, parameters: List[str] = []
) -> Callable[[F], CommandCallback]: ...


def command(
    func_or_name: Union[str, F, None] = None,
    *,
    description: Optional[str] = None,
    parameters: List[str] = [],
) -> Union[CommandCallback, Callable[[F], CommandCallback]]:
    """Decorator to define a command

    .. seealso:: :class:`monometric.types.Command` for more information on the parameters

    Args:
        func_or_name (:obj:`str` | :obj:`typing.Callable`, optional): Name of the
            command or the function to be decorated
        description (:obj:`str`, optional): Description of the command, will be
            extracted from the function's docstring if not provided
        parameters (:obj:`list` of :obj:`str`, optional): Positional parameters,
            ``<name>`` for required and ``[name]`` for optional ones

    Returns:
        :obj:`typing.Callable`: Decorator if only the options are provided, else the
            decorated function

    Raises:
        ValueError: If the command name is invalid
        ValueError: If the description is not provided
    """

    def outer_wrapper(func: F) -> CommandCallback:
        if isinstance(func_or_name, str):
            name = func_or_name
        else:
            name = func.__name__.replace("_", "-")

        name = " ".join(name.lower().split())

        if not re.match(r"^[a-z0-9-]+( [a-z0-9-]+)*$", name):
            raise ValueError(f'Invalid command name: "{name}", only alphanumeric characters and hyphens are allowed')

        desc = description or func.__doc__
        if not desc:
            raise ValueError(f"Description is required for command: {name}, either via the decorator or the docstring")
        desc = inspect.cleandoc(desc).splitlines()[0]

        signature = list(inspect.signature(func).parameters.values())
        positional_parameters = signature[: len(parameters)]
        flag_parameters = {
            parameter.name: parameter
            for parameter in signature[len(parameters) :]
            if parameter.default is not inspect.Parameter.empty
        }
        required = " ".join(parameters).count("<")

        def parse_cmd_args(args: List[str]) -> Dict[str, Any]:
            """Parse the command arguments according to the function's annotations

            Args:
                args (:obj:`list` of :obj:`str`): Arguments after the command name

            Returns:
                :obj:`dict`: Keyword arguments for the function

            Raises:
                UsageError: If arguments are missing, unknown or cannot be parsed
            """
            positional, flags = _split_arguments(name, args, flag_parameters)
            if len(positional) < required:
                raise UsageError(
                    f'Not enough arguments provided for command: "{name}", expected: {" ".join(parameters)}'
                )
            if len(positional) > len(parameters):
                raise UsageError(f'Too many arguments for command: "{name}", expected: {" ".join(parameters)}')

            kwargs: Dict[str, Any] = {}
            pairs = [(parameter, [value]) for parameter, value in zip(positional_parameters, positional)]
            pairs += [(flag_parameters[key], values) for key, values in flags.items()]
            for parameter, values in pairs:
                try:
                    parsed = [_parse_according_to_annotation(parameter.annotation, value) for value in values]
                except ValueError as e:
                    raise UsageError(
                        f'Failed to parse argument: "{parameter.name}" with value: "{values[-1]}" - {e}'
                    ) from e
                if _is_list(parameter.annotation) and len(parsed) > 1:
                    kwargs[parameter.name] = [item for items in parsed for item in items]
                else:
                    kwargs[parameter.name] = parsed[-1]
            return kwargs

        @wraps(func)
        def wrapper(args: List[str]) -> ExitCode:
            kwargs = parse_cmd_args(args)
            LOGGER.debug(f"Command: {name}, Args: {kwargs} - Parsed")
            return func(**kwargs)

        cmd = Command(
            name=name,
            callback=wrapper,
            description=desc,
            parameters=list(parameters),
            flags=[f"--{flag.replace('_', '-')}" for flag in flag_parameters],
        )
        setattr(wrapper, "command", cmd)
        setattr(wrapper, "command_name", name)
        COMMANDS[name] = cmd
        return wrapper

    if func_or_name is None or isinstance(func_or_name, str):
        return outer_wrapper
    return outer_wrapper(func_or_name)


def find_command(args: List[str]) -> Tuple[Optional[Command], List[str]]:
    """Find the registered command with the longest name matching the start of ``args``

    Returns:
        :obj:`tuple`: The command (or None) and the remaining arguments
    """
    for length in range(min(len(args), 3), 0, -1):
        name = " ".join(args[:length]).lower()
        if name in COMMANDS:
            return COMMANDS[name], args[length:]
    return None, args
