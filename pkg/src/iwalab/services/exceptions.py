from __future__ import annotations

from iwalab.exceptions import IwalabError


class SessionError(IwalabError):
    pass
