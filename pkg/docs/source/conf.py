import os
import sys
from datetime import date
from pathlib import Path

from sphinx.application import Sphinx

sys.path.insert(0, str(Path(__file__).resolve().parents[2]))

from monometric.info import NAME, __version__  # noqa: E402

AUTHOR = "Nachtalb"

# -- General configuration ------------------------------------------------
project = NAME
copyright = f"{date.today().year}, {AUTHOR}"
author = AUTHOR

version = __version__
release = __version__

# If your documentation needs a minimal Sphinx version, state it here.
needs_sphinx = "6.1.3"

extensions = [
    "sphinx.ext.autodoc",
    "enum_tools.autoenum",
    "sphinx.ext.napoleon",
    "sphinx.ext.intersphinx",
    "sphinx.ext.mathjax",
    "sphinx_paramlinks",
    "sphinx_copybutton",
    "sphinx.ext.autosectionlabel",
]

# Use intersphinx to reference the python builtin library docs
intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "numpy": ("https://numpy.org/doc/stable/", None),
    "scipy": ("https://docs.scipy.org/doc/scipy/", None),
}

# Add any paths that contain templates here, relative to this directory.
templates_path = ["_templates"]

source_suffix = ".rst"

# The master toctree document.
master_doc = "index"

# -- Extension settings ------------------------------------------------
napoleon_use_admonition_for_examples = True

autodoc_typehints = "description"
autodoc_typehints_description_target = "documented"

# Show docstring for special members
autodoc_default_options = {
    "special-members": True,
    # For some reason, __weakref__ can not be ignored by using "inherited-members" in all cases
    # so we list it here.
    "exclude-members": "__init__, __weakref__, __post_init__, __dict__, __dataclass_fields__, __dataclass_params__",
    "member-order": "bysource",
}

autosectionlabel_prefix_document = True

# Paramlink style
paramlinks_hyperlink_param = "name"

# The name of the Pygments (syntax highlighting) style to use.
pygments_style = "sphinx"

# Decides the language used for syntax highlighting of code blocks.
highlight_language = "python3"

# -- Options for HTML output ----------------------------------------------

html_theme = "furo"

html_theme_options = {
    "navigation_with_keys": True,
    "dark_css_variables": {
        "admonition-title-font-size": "0.95rem",
        "admonition-font-size": "0.92rem",
    },
    "light_css_variables": {
        "admonition-title-font-size": "0.95rem",
        "admonition-font-size": "0.92rem",
    },
}

html_title = f"{project}<br> v{version}"

html_static_path = ["_static"]
html_permalinks_icon = "¶"  # Furo's default permalink icon is `#` which doesn't look great imo.

# Output file base name for HTML help builder.
htmlhelp_basename = "monometric-doc"

# Set canonical URL from the Read the Docs Domain
html_baseurl = os.environ.get("READTHEDOCS_CANONICAL_URL", "")

# Tell Jinja2 templates the build is running on Read the Docs
html_context = {}
if os.environ.get("READTHEDOCS", "") == "True":
    html_context["READTHEDOCS"] = True

# -- Scripts ------------------------------------------------------------

from docs.auxil.sphinx_hooks import autodoc_process_bases  # noqa: E402


def setup(app: Sphinx) -> None:
    app.connect("autodoc-process-bases", autodoc_process_bases)
