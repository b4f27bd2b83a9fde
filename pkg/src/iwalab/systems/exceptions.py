from __future__ import annotations

from iwalab.exceptions import IwalabError


class GammaSystemError(IwalabError):
    pass


class StabilityError(GammaSystemError):
    pass


class CharacterZeroError(GammaSystemError):
    pass


class TwistConditionError(GammaSystemError):
    pass


class SplitError(GammaSystemError):
    pass
