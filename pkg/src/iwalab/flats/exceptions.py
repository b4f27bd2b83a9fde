from __future__ import annotations

from iwalab.exceptions import IwalabError


class FlatError(IwalabError):
    pass


class BudgetError(FlatError):
    def __init__(self, required: int, budget: int):
        super().__init__(
            f"{required} characters to enumerate, over the budget of {budget} "
            f"(raise it with --budget {required})."
        )
        self.required = required
        self.budget = budget


class IndependenceError(FlatError):
    pass


class TwistSearchError(FlatError):
    pass
