from __future__ import annotations

from iwalab.exceptions import IwalabError


class SchemaError(IwalabError):
    """A document that does not follow the schema, located by ``path``."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
