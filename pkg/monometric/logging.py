"""This module provides a typed logging function and the package logger

Everything is written to standard error. Standard output is reserved for the
reports of the command line interface.

Example:

    Using a python logging.Logger

    .. code-block:: python

        import logging
        from monometric.logging import LOGGER

        LOGGER.setLevel(logging.DEBUG)
        LOGGER.debug("Hello World!")

    Using the log function

    .. code-block:: python

        from monometric.logging import log

        log("Hello World!")
        # monometric - INFO - Hello World!

        log("%d trials skipped", 3, prefix="monotone")
        # monometric - INFO - monotone: 3 trials skipped
"""

import logging
import sys
from typing import Any, Optional

from .info import NAME
from .types import LogLevel

__all__ = ["log", "LOGGER", "set_verbose"]


def log(
    message: str,
    *message_args: Any,
    level: LogLevel = LogLevel.INFO,
    prefix: Optional[str] = None,
) -> None:
    """Log a user facing message

    Args:
        message (:obj:`str`): Message to be logged
        message_args (:obj:`typing.Any`) : Arguments to be formatted in the message.
            Common log python log arguments such as ``%s``, ``%d``, etc. can
            be used
        level (:obj:`monometric.types.LogLevel`, optional): Log level
        prefix (:obj:`str`, optional): Prefix to be added to the message, will
            be prefixed to the message in the format "PREFIX: message"
    """
    if prefix:
        message = f"{prefix}: {message}"
    LOGGER.log(int(level), message, *message_args)


def set_verbose(verbose: bool) -> None:
    """Switch the package logger between INFO and DEBUG

    Args:
        verbose (:obj:`bool`): Whether to show debug output
    """
    LOGGER.setLevel(logging.DEBUG if verbose else logging.INFO)


handler = logging.StreamHandler(sys.stderr)
format = logging.Formatter("%(name)s - %(levelname)s - %(message)s")
handler.setFormatter(format)

LOGGER = logging.Logger(NAME, level=logging.INFO)
LOGGER.addHandler(handler)
LOGGER.__doc__ = """
Your typical :class:`logging.Logger` writing to standard error

* It is already configured with the project's name
* It uses the format ``%(name)s - %(levelname)s - %(message)s``
* It defaults to INFO, :func:`set_verbose` switches it to DEBUG

Example:

        .. code-block:: python

            from monometric.logging import LOGGER

            LOGGER.setLevel(logging.DEBUG)
            LOGGER.debug("Hello World!")
"""
