from __future__ import annotations

from pathlib import Path

import click

from iwalab import __app_name__


CONFIG_DIR = Path(click.get_app_dir(__app_name__))

BUDGET_ENV_VAR = "IWALAB_BUDGET"
