from __future__ import annotations

import logging

from importlib import metadata


__app_name__ = "iwalab"
__version__ = metadata.version(__app_name__)

logging.getLogger(__app_name__).addHandler(logging.NullHandler())
