"""Project information

The name and version are taken from the installed distribution metadata. When
running from a source checkout without installing, they are read from the
``pyproject.toml`` next to the package instead, and if that is missing as
well the fallback values below are used.

Example:

    .. code-block:: python

        from monometric.info import NAME, __version__

        print(f"{NAME} {__version__}")
"""

import ast
import configparser
from importlib import metadata
from pathlib import Path
from typing import Dict, Optional

__all__ = ["NAME", "DESCRIPTION", "__version__", "find_file_in_parents", "load_project_info"]

FALLBACK_INFO: Dict[str, str] = {
    "name": "monometric",
    "description": "Monotone Riemannian metrics on density matrices via operator monotone functions.",
    "version": "0.1.0",
}
"""Fallback information in case neither metadata nor ``pyproject.toml`` is available"""


def find_file_in_parents(file: str, start: Path) -> Optional[Path]:
    """Find a file in the parent directories of the given path

    Args:
        file (:obj:`str`): File to search for
        start (:obj:`pathlib.Path`): Path to start the search from

    Returns:
        :obj:`pathlib.Path` | :obj:`None`: Path to the file or None if not found
    """
    path = start
    while path != path.parent:
        if (path / file).exists():
            return path / file
        path = path.parent
    return None


def load_project_info() -> Dict[str, str]:
    """Load the project name, description and version

    Returns:
        :obj:`dict`: Project information with the keys ``name``, ``description`` and ``version``
    """
    info = dict(FALLBACK_INFO)
    try:
        dist = metadata.metadata(FALLBACK_INFO["name"])
        info["version"] = dist["Version"]
        info["description"] = dist["Summary"] or info["description"]
        return info
    except metadata.PackageNotFoundError:
        pass

    pyproject = find_file_in_parents("pyproject.toml", Path(__file__).parent)
    if pyproject:
        config = configparser.ConfigParser()
        try:
            config.read(str(pyproject))
        except configparser.Error:
            return info

        for option in ["name", "description", "version"]:
            if config.has_option("tool.poetry", option):
                info[option] = ast.literal_eval(config.get("tool.poetry", option))
    return info


_INFO = load_project_info()

NAME = _INFO["name"]
"""Project name"""

DESCRIPTION = _INFO["description"]
"""Short project description"""

__version__ = _INFO["version"]
"""Project version"""
