from __future__ import annotations


class IwalabError(Exception):
    """Iwalab base class exception."""

    exit_code = 2

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message
