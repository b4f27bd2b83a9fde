from __future__ import annotations

from iwalab.exceptions import IwalabError


class IdealError(IwalabError):
    pass
