from __future__ import annotations

import iwalab


# -- Project information -----------------------------------------------------

project = "iwalab"
copyright = "2026, iwalab developers"
author = "iwalab developers"
version = iwalab.__version__
release = iwalab.__version__

# -- General configuration ---------------------------------------------------

extensions = [
    "myst_parser",
]
source_suffix = ".rst"
templates_path = ["_templates"]
exclude_patterns = []
master_doc = "index"

# -- Options for HTML output -------------------------------------------------

html_theme = "alabaster"
html_title = "iwalab Documentation"
html_theme_options = {
    "show_powered_by": True,
    "show_related": False,
}
html_show_copyright = True
html_show_sourcelink = False
