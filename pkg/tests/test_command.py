from typing import List, Optional

import pytest

from monometric.command import COMMANDS, command, find_command
from monometric.errors import UsageError
from monometric.types import ExitCode

calls = []


@command("test greet", parameters=["<name>", "[times]"])
def greet(name: str, times: int = 1, loud: bool = False, tags: Optional[List[str]] = None) -> ExitCode:
    """Greet someone

    Only the first line is the description.
    """
    calls.append({"name": name, "times": times, "loud": loud, "tags": tags})
    return ExitCode.OK


@command(description="Parse numbers")
def number_list(values: List[complex] = [], scale: float = 1.0) -> ExitCode:
    calls.append({"values": values, "scale": scale})
    return ExitCode.OK


@pytest.fixture(autouse=True)
def clear_calls():
    calls.clear()


def test_registration():
    cmd = COMMANDS["test greet"]
    assert cmd["description"] == "Greet someone"
    assert cmd["parameters"] == ["<name>", "[times]"]
    assert cmd["flags"] == ["--loud", "--tags"]
    assert greet.command_name == "test greet"
    assert number_list.command_name == "number-list"


def test_positional_arguments():
    assert greet(["World"]) == ExitCode.OK
    assert calls == [{"name": "World", "times": 1, "loud": False, "tags": None}]
    greet(["World", "3"])
    assert calls[-1]["times"] == 3


@pytest.mark.parametrize(
    "args, loud",
    [
        (["World", "--loud"], True),
        (["World", "--loud", "false"], False),
        (["World", "--loud=yes"], True),
        (["World", "--loud", "--tags", "a"], True),
    ],
)
def test_boolean_flags(args, loud):
    greet(args)
    assert calls[-1]["loud"] is loud


def test_list_flags_extend():
    greet(["World", "--tags", "a,b", "--tags=c"])
    assert calls[-1]["tags"] == ["a", "b", "c"]


def test_scalar_flags_replace():
    number_list(["--scale", "2", "--scale", "0.5"])
    assert calls[-1]["scale"] == 0.5


def test_complex_values():
    number_list(["--values", "1, 0.5i,-2+1i"])
    assert calls[-1]["values"] == [1 + 0j, 0.5j, -2 + 1j]


@pytest.mark.parametrize(
    "args",
    [
        [],
        ["World", "2", "extra"],
        ["World", "--unknown", "1"],
        ["World", "x"],
        ["World", "--tags"],
        ["World", "--loud", "maybe"],
    ],
)
def test_usage_errors(args):
    with pytest.raises(UsageError):
        greet(args)
    assert calls == []


def test_invalid_command_definitions():
    with pytest.raises(ValueError):

        @command("Bad_Name!")
        def bad() -> ExitCode:
            """Bad"""
            return ExitCode.OK

    with pytest.raises(ValueError):

        @command("test undocumented")
        def undocumented() -> ExitCode:
            return ExitCode.OK


def test_find_command():
    cmd, rest = find_command(["test", "greet", "World", "--loud"])
    assert cmd is COMMANDS["test greet"]
    assert rest == ["World", "--loud"]
    assert find_command(["NUMBER-LIST"])[0] is COMMANDS["number-list"]
    assert find_command(["nothing", "here"]) == (None, ["nothing", "here"])
