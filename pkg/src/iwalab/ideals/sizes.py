from __future__ import annotations

import logging

from dataclasses import dataclass
from fractions import Fraction

from sympy import Matrix

from iwalab.algebra.characters import evaluate_character
from iwalab.algebra.characters import galois_orbit
from iwalab.algebra.characters import galois_representatives
from iwalab.algebra.element import AlgebraElement
from iwalab.algebra.operations import multiply
from iwalab.algebra.types import GroupVector
from iwalab.flats.zeros import DEFAULT_BUDGET
from iwalab.flats.zeros import check_budget
from iwalab.ideals.elementary import ElementaryModule
from iwalab.ideals.exceptions import IdealError


logger = logging.getLogger(__name__)


def valuation_sum(xi: AlgebraElement, p: int, level: int) -> Fraction:
    """Sum of v_p(omega(xi)) over the characters of Gamma_level."""
    total = Fraction(0)
    for omega in galois_representatives(p, xi.d, level):
        value = evaluate_character(omega, xi)
        if value.is_zero():
            raise IdealError(
                f"Character {omega} of level {level} is a zero of {xi}; "
                "the quotient is infinite."
            )
        total += len(galois_orbit(omega)) * value.valuation()
    return total


def finite_level_size(
    module: ElementaryModule, p: int, level: int, budget: int = DEFAULT_BUDGET
) -> int:
    """|M / I_n M|, from the valuations of the factors at every character."""
    if module.is_zero():
        return 1
    check_budget(p, module.d or 1, level, budget)
    exponent = Fraction(0)
    for xi, r in module.factors:
        if xi.ring.kind != "integer":
            raise IdealError(f"Sizes need integer coefficients, {xi} has {xi.ring}.")
        exponent += r * valuation_sum(xi, p, level)
    if exponent.denominator != 1:
        raise IdealError(f"Valuation sum {exponent} is not an integer.")
    logger.debug("Level %s: |M/I_n M| = %s^%s", level, p, exponent)
    return int(p**exponent.numerator)


def multiplication_matrix(xi: AlgebraElement, p: int, level: int) -> Matrix:
    """Multiplication by xi on Z[Gamma_level], group elements in lexicographic order."""
    elements = [g.exponents for g in GroupVector.all_elements(p, xi.d, level)]
    index = {g: i for i, g in enumerate(elements)}
    reduced = xi.reduce_level(p, level)
    columns = []
    for g in elements:
        product = multiply(reduced, AlgebraElement.monomial(g), level=level, p=p)
        column = [0] * len(elements)
        for key, c in product.terms:
            column[index[key]] = int(c)  # type: ignore[call-overload]
        columns.append(column)
    return Matrix(columns).T


@dataclass(frozen=True)
class GrowthProfile:
    """Z-ranks of Lambda / (I_n + (xi)) for n = 0..N."""

    p: int
    d: int
    ranks: tuple[int, ...]

    @property
    def constant(self) -> Fraction:
        """Largest rank_n / p^(n(d-1)) over the levels before the last one."""
        fitted = self.ranks[:-1] or self.ranks
        return max(
            Fraction(rank, self.p ** (n * (self.d - 1)))
            for n, rank in enumerate(fitted)
        )

    @property
    def within_bound(self) -> bool:
        """Whether the last rank stays within constant * p^(N(d-1))."""
        top = len(self.ranks) - 1
        return self.ranks[top] <= self.constant * self.p ** (top * (self.d - 1))

    @property
    def stabilized(self) -> bool:
        return len(self.ranks) >= 2 and self.ranks[-1] == self.ranks[-2]


def growth_profile(
    xi: AlgebraElement, p: int, max_level: int, budget: int = DEFAULT_BUDGET
) -> GrowthProfile:
    if xi.is_zero():
        raise IdealError("The growth of Lambda / (0) is not bounded.")
    if xi.ring.kind != "integer":
        raise IdealError(f"Growth profiles need integer coefficients, not {xi.ring}.")
    check_budget(p, xi.d, max_level, budget)

    ranks = []
    for level in range(max_level + 1):
        matrix = multiplication_matrix(xi, p, level)
        ranks.append(matrix.rows - matrix.rank())
        logger.debug("Level %s: rank %s", level, ranks[-1])
    profile = GrowthProfile(p, xi.d, tuple(ranks))
    if not profile.within_bound:
        logger.warning(
            "Rank %s at level %s exceeds %s * p^(n(d-1))",
            ranks[-1],
            max_level,
            profile.constant,
        )
    return profile
