#!/usr/bin/env python
import subprocess
import sys
import webbrowser
from pathlib import Path
from typing import Union

BASE_PATH = Path(__file__).resolve().parent
CWD = Path().resolve()


def _cwd_or_base_path(file: Union[str, Path]) -> Path:
    final_file = CWD / file
    if final_file.exists():
        return final_file
    return BASE_PATH / file


def build_docs() -> None:
    docs_dir = _cwd_or_base_path("docs")
    result = subprocess.run(["sphinx-build", "-b", "html", str(docs_dir / "source"), str(docs_dir / "build" / "html")])
    sys.exit(result.returncode)


def open_docs() -> None:
    index_path = _cwd_or_base_path("docs/build/html/index.html")
    webbrowser.open(f"file://{index_path}")


def check() -> None:
    sys.exit(subprocess.run(["pre-commit", "run", "--all-files"]).returncode)


def test() -> None:
    sys.exit(subprocess.run(["pytest", *sys.argv[1:]], cwd=BASE_PATH).returncode)
