from __future__ import annotations

import sys


if sys.platform.startswith("win"):
    DEFAULT = "bright_white"
    INFO = "blue"
    SUCCESS = "bright_green"
    WARNING = "bright_yellow"
    ERROR = "red"
    UNKNOWN = "bright_black"

    BANNER = "cyan"
    WITNESS = "yellow"
else:
    DEFAULT = "bright_white"
    INFO = "steel_blue1"
    SUCCESS = "chartreuse3"
    WARNING = "orange1"
    ERROR = "red"
    UNKNOWN = "bright_black"

    BANNER = "italic khaki1"
    WITNESS = "italic orange1"

HEADER = "bold"
