from __future__ import annotations

from iwalab.exceptions import IwalabError


class ModuleError(IwalabError):
    pass


class ModuleMapError(ModuleError):
    pass


class PairingError(ModuleError):
    pass
