from __future__ import annotations


PASSED = "✔"
FAILED = "✘"
UNDETERMINED = "?"
LIST = "•"
INFO = "ℹ"  # noqa: RUF001
WARNING = "▼"
ERROR = "✘"
SUCCESS = "✔"
NOTIFICATION = ">"
