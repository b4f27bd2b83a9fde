from __future__ import annotations

import pytest

from iwalab.algebra.element import AlgebraElement
from iwalab.ideals.elementary import ElementaryModule
from iwalab.ideals.elementary import Factor
from iwalab.ideals.elementary import IdealDescriptor
from iwalab.ideals.elementary import associate
from iwalab.ideals.elementary import chi
from iwalab.ideals.elementary import normalize_monomial
from iwalab.ideals.elementary import sharp_ideal
from iwalab.ideals.exceptions import IdealError
from tests.test_ideals.conftest import g
from tests.test_ideals.conftest import gamma_minus


def test_factors_are_validated():
    with pytest.raises(IdealError, match="Factor 0 is zero"):
        _ = ElementaryModule.cyclic(AlgebraElement.zero(1))

    with pytest.raises(IdealError, match="multiplicity 0"):
        _ = ElementaryModule.cyclic(gamma_minus(4), 0)

    with pytest.raises(IdealError, match="different ranks"):
        _ = ElementaryModule((Factor(gamma_minus(4), 1), Factor(g(1, 0), 1)))


def test_empty_module_is_zero():
    module = ElementaryModule()

    assert module.is_zero()
    assert module.d is None
    assert len(module) == 0
    assert chi(module).is_unit()
    assert chi(module).format() == "(1)"


def test_direct_sum_and_powers():
    module = ElementaryModule.cyclic(gamma_minus(4), 2).direct_sum(
        ElementaryModule.cyclic(AlgebraElement.constant(1, 3))
    )

    assert len(module) == 2
    assert module.d == 1
    assert module.powers() == [
        gamma_minus(4) ** 2,
        AlgebraElement.constant(1, 3),
    ]


def test_chi_is_the_product_of_the_relations():
    module = ElementaryModule(
        (Factor(gamma_minus(4), 2), Factor(AlgebraElement.constant(1, 3), 1))
    )
    ideal = chi(module)

    assert ideal.format() == "(-4 + g1)^2*(3)"
    assert ideal.format(["T"]) == "(-4 + T)^2*(3)"
    assert ideal.generator(1) == gamma_minus(4) * gamma_minus(4) * 3


def test_descriptors_multiply_by_concatenation():
    first = IdealDescriptor((Factor(gamma_minus(1), 1),))
    second = IdealDescriptor((Factor(gamma_minus(4), 1),))

    assert (first * second).factors == first.factors + second.factors


def test_sharp_ideal_inverts_the_group():
    ideal = sharp_ideal(chi(ElementaryModule.cyclic(gamma_minus(4))))

    assert ideal.factors[0].xi == g(-1) - AlgebraElement.constant(1, 4)


def test_normalize_monomial():
    assert normalize_monomial(g(2) - g(1)) == gamma_minus(1)
    assert normalize_monomial(g(1, 3) + g(2, 1)) == g(0, 2) + g(1, 0)
    assert normalize_monomial(AlgebraElement.zero(1)).is_zero()


def test_associate_up_to_a_unit_monomial():
    assert associate(gamma_minus(1), g(3) - g(2), 3) is True
    assert associate(gamma_minus(1), gamma_minus(1) * 2, 3) is True


def test_associate_detects_different_valuations():
    assert associate(gamma_minus(1), gamma_minus(4), 3) is False
    assert associate(gamma_minus(1), gamma_minus(1) * 3, 3) is False


def test_associate_rejects_rank_mismatch():
    with pytest.raises(IdealError, match="different ranks"):
        associate(gamma_minus(1), gamma_minus(1, d=2), 3)
