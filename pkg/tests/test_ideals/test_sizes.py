from __future__ import annotations

from fractions import Fraction

import pytest

from iwalab.algebra.element import AlgebraElement
from iwalab.flats.exceptions import BudgetError
from iwalab.ideals.elementary import ElementaryModule
from iwalab.ideals.exceptions import IdealError
from iwalab.ideals.sizes import GrowthProfile
from iwalab.ideals.sizes import finite_level_size
from iwalab.ideals.sizes import growth_profile
from iwalab.ideals.sizes import valuation_sum
from tests.test_ideals.conftest import gamma_minus


@pytest.mark.parametrize("level", [0, 1, 2, 3, 4])
def test_size_of_the_cyclic_quotient(level):
    module = ElementaryModule.cyclic(gamma_minus(4))

    assert finite_level_size(module, 3, level) == 3 ** (level + 1)


def test_size_with_multiplicity():
    module = ElementaryModule.cyclic(gamma_minus(4), 2)

    assert finite_level_size(module, 3, 1) == 81


def test_size_of_the_mod_p_quotient():
    module = ElementaryModule.cyclic(AlgebraElement.constant(1, 3))

    assert finite_level_size(module, 3, 1) == 27


def test_size_of_the_zero_module():
    assert finite_level_size(ElementaryModule(), 3, 5) == 1


def test_valuation_sum():
    assert valuation_sum(gamma_minus(4), 3, 1) == Fraction(2)


def test_infinite_quotient():
    with pytest.raises(IdealError, match="the quotient is infinite"):
        finite_level_size(ElementaryModule.cyclic(gamma_minus(1)), 3, 0)


def test_size_respects_the_budget():
    with pytest.raises(BudgetError, match="--budget 9"):
        finite_level_size(ElementaryModule.cyclic(gamma_minus(4)), 3, 2, budget=3)


def test_growth_of_a_codimension_one_quotient():
    profile = growth_profile(gamma_minus(1, d=2), 3, 1)

    assert profile.ranks == (1, 3)
    assert profile.constant == 1
    assert profile.within_bound
    assert not profile.stabilized


def test_growth_of_a_finite_quotient():
    profile = growth_profile(gamma_minus(4), 3, 2)

    assert profile.ranks == (0, 0, 0)
    assert profile.stabilized


def test_growth_beyond_the_bound():
    assert not GrowthProfile(3, 2, (1, 3, 27)).within_bound


def test_growth_of_zero():
    with pytest.raises(IdealError, match="not bounded"):
        growth_profile(AlgebraElement.zero(1), 3, 1)
