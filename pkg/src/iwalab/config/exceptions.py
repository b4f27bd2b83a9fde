from __future__ import annotations

from iwalab.exceptions import IwalabError


class ConfigError(IwalabError):
    pass


class ConfigFileError(ConfigError):
    pass
