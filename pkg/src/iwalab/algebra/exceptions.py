from __future__ import annotations

from iwalab.exceptions import IwalabError


class AlgebraError(IwalabError):
    pass


class RingMismatchError(AlgebraError):
    pass


class InexactValueError(AlgebraError):
    pass


class AlgebraPreconditionError(AlgebraError):
    pass
