from __future__ import annotations

import logging

from typing import Sequence

from iwalab.algebra.characters import Character
from iwalab.algebra.characters import UnitCharacter
from iwalab.algebra.characters import enumerate_characters
from iwalab.algebra.characters import evaluate_character
from iwalab.algebra.element import AlgebraElement
from iwalab.algebra.operations import integral_twist
from iwalab.flats.exceptions import BudgetError
from iwalab.flats.exceptions import FlatError
from iwalab.utils import chunked
from iwalab.utils import parallel_map


logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 729


def character_count(p: int, d: int, level: int) -> int:
    return int(p ** (d * level))


def check_budget(p: int, d: int, level: int, budget: int) -> None:
    required = character_count(p, d, level)
    if required > budget:
        raise BudgetError(required, budget)
    if required * 4 > budget * 3:
        logger.warning(
            "Enumerating %s characters, close to the budget of %s", required, budget
        )


def _zeros_in(xi: AlgebraElement, characters: Sequence[Character]) -> list[Character]:
    return [omega for omega in characters if evaluate_character(omega, xi).is_zero()]


def zero_set_level(
    xi: AlgebraElement,
    p: int,
    level: int,
    budget: int = DEFAULT_BUDGET,
    jobs: int = 1,
) -> list[Character]:
    """
    Characters of Gamma_level killing ``xi``, in lexicographic order.

    Values are computed exactly, so ``xi`` must not carry reduced
    coefficients.
    """
    if not xi.ring.is_exact:
        raise FlatError(f"Zero sets need exact coefficients, not {xi.ring}.")
    check_budget(p, xi.d, level, budget)

    characters = list(enumerate_characters(p, xi.d, level))
    size = max(1, len(characters) // max(jobs, 1))
    batches = parallel_map(
        lambda batch: _zeros_in(xi, batch), list(chunked(characters, size)), jobs
    )
    zeros = sorted(omega for batch in batches for omega in batch)
    logger.debug(
        "Level %s: %s zeros among %s characters", level, len(zeros), len(characters)
    )
    return zeros


def twisted_zero_set(
    phi: UnitCharacter,
    xi: AlgebraElement,
    level: int,
    budget: int = DEFAULT_BUDGET,
    jobs: int = 1,
    inverse: bool = False,
) -> list[Character]:
    """Zero set of phi*(xi), decided exactly through an integral representative."""
    twisted = integral_twist(phi, xi, inverse=inverse)
    return zero_set_level(twisted.element, phi.p, level, budget, jobs)


def has_character_zero(
    xi: AlgebraElement, p: int, level: int, budget: int = DEFAULT_BUDGET
) -> Character | None:
    """The first character of Gamma_level killing ``xi``, if any."""
    check_budget(p, xi.d, level, budget)
    for omega in enumerate_characters(p, xi.d, level):
        if evaluate_character(omega, xi).is_zero():
            return omega
    return None
