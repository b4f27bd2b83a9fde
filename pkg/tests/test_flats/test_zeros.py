from __future__ import annotations

import pytest

from iwalab.algebra.characters import Character
from iwalab.algebra.characters import UnitCharacter
from iwalab.algebra.element import AlgebraElement
from iwalab.algebra.types import CoefficientRing
from iwalab.flats.exceptions import BudgetError
from iwalab.flats.exceptions import FlatError
from iwalab.flats.zeros import character_count
from iwalab.flats.zeros import check_budget
from iwalab.flats.zeros import has_character_zero
from iwalab.flats.zeros import twisted_zero_set
from iwalab.flats.zeros import zero_set_level


def gamma_minus(value: int, d: int = 1, index: int = 0) -> AlgebraElement:
    return AlgebraElement.generator(d, index) - AlgebraElement.constant(d, value)


def test_character_count():
    assert character_count(3, 2, 2) == 81
    assert character_count(5, 1, 0) == 1


def test_check_budget():
    check_budget(3, 2, 1, 9)

    with pytest.raises(BudgetError) as excinfo:
        check_budget(3, 2, 2, 80)

    assert excinfo.value.required == 81
    assert excinfo.value.budget == 80
    assert "raise it with --budget 81" in excinfo.value.message


@pytest.mark.parametrize("level", [1, 2])
def test_zeros_of_the_remark_element(xi, level):
    assert zero_set_level(xi, 3, level) == [Character.trivial(3, 2, level)]


def test_zeros_of_an_augmentation():
    zeros = zero_set_level(gamma_minus(1, d=2), 3, 1)

    assert [omega.exponents for omega in zeros] == [(0, 0), (0, 1), (0, 2)]


@pytest.mark.parametrize("jobs", [1, 2])
def test_zeros_do_not_depend_on_jobs(jobs):
    xi = gamma_minus(1, d=2, index=1)

    assert zero_set_level(xi, 3, 1, jobs=jobs) == zero_set_level(xi, 3, 1)


def test_zero_set_needs_exact_coefficients():
    xi = gamma_minus(1).to_ring(CoefficientRing.modular(3, 2))

    with pytest.raises(FlatError, match="exact coefficients"):
        zero_set_level(xi, 3, 1)


def test_zero_set_respects_the_budget(xi):
    with pytest.raises(BudgetError):
        zero_set_level(xi, 3, 2, budget=80)


def test_has_character_zero(xi):
    assert has_character_zero(xi, 3, 1) == Character.trivial(3, 2, 1)
    assert has_character_zero(gamma_minus(4), 3, 2) is None


def test_twisted_zero_set():
    phi = UnitCharacter(3, 4, (4,))

    assert twisted_zero_set(phi, gamma_minus(1), 1) == []
    assert twisted_zero_set(phi, gamma_minus(4), 1, inverse=True) == [
        Character.trivial(3, 1, 1)
    ]
