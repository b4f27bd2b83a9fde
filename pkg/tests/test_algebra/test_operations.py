from __future__ import annotations

import pytest

from hypothesis import given

from iwalab.algebra.characters import UnitCharacter
from iwalab.algebra.cyclotomic import cyclotomic_coefficients
from iwalab.algebra.element import AlgebraElement
from iwalab.algebra.exceptions import AlgebraPreconditionError
from iwalab.algebra.exceptions import RingMismatchError
from iwalab.algebra.operations import in_level_ideal
from iwalab.algebra.operations import integral_twist
from iwalab.algebra.operations import multiply
from iwalab.algebra.operations import norm_element
from iwalab.algebra.operations import norm_identity_holds
from iwalab.algebra.operations import sharp
from iwalab.algebra.operations import simple_element
from iwalab.algebra.operations import twist_endo
from iwalab.algebra.types import CoefficientRing
from tests.test_algebra.conftest import elements


def g(*exponents: int) -> AlgebraElement:
    return AlgebraElement.monomial(exponents)


@given(elements())
def test_sharp_is_an_involution(x):
    assert sharp(sharp(x)) == x


@given(elements(), elements())
def test_sharp_is_multiplicative(x, y):
    assert sharp(x * y) == sharp(x) * sharp(y)


@pytest.mark.parametrize("p, order", [(2, 0), (2, 3), (3, 1), (3, 2), (5, 1)])
def test_simple_elements_are_cyclotomic_polynomials(p, order):
    x = simple_element((1,), order, p)

    expected = {(j,): c for j, c in enumerate(cyclotomic_coefficients(p, order)) if c}
    assert x.as_dict() == expected


def test_simple_element_along_a_direction():
    x = simple_element((1, 2), 1, 3)

    assert x == AlgebraElement.one(2) + g(1, 2) + g(2, 4)


def test_simple_element_needs_a_direction_outside_gamma_p():
    with pytest.raises(AlgebraPreconditionError, match="lies in Gamma"):
        simple_element((3, 6), 1, 3)


def test_multiply_at_a_level():
    x = g(2) + AlgebraElement.one(1)

    assert multiply(x, x, level=1, p=3) == g(1) + g(2) * 2 + AlgebraElement.one(1)


def test_norm_element():
    assert norm_element(3, 1, 1, 0) == AlgebraElement.one(1) + g(1) + g(2)
    assert norm_element(2, 2, 1, 1) == AlgebraElement.one(2)


@pytest.mark.parametrize("p, d, n, m", [(2, 1, 3, 1), (3, 2, 2, 1), (5, 1, 1, 0)])
def test_norm_identity(p, d, n, m):
    assert norm_identity_holds(p, d, n, m)


def test_in_level_ideal():
    assert in_level_ideal(g(9) - AlgebraElement.one(1), 3, 2)
    assert not in_level_ideal(g(3) - AlgebraElement.one(1), 3, 2)


def test_twist_endo_reduces_modulo_the_precision():
    phi = UnitCharacter(3, 2, (4,))

    twisted = twist_endo(phi, g(1) - AlgebraElement.one(1))

    ring = CoefficientRing.modular(3, 2)
    assert twisted.converted
    assert twisted.element == AlgebraElement(1, (((0,), 8), ((1,), 7)), ring)


@given(elements())
def test_twist_endo_inverse(x):
    phi = UnitCharacter(3, 3, (4, 10))

    twisted = twist_endo(phi, x).element
    restored = twist_endo(phi, twisted, inverse=True)

    assert not restored.converted
    assert restored.element == x.to_ring(CoefficientRing.modular(3, 3))


def test_twist_endo_rank_mismatch():
    with pytest.raises(RingMismatchError):
        twist_endo(UnitCharacter(3, 2, (4,)), g(1, 0))


def test_integral_twist_of_augmentation():
    phi = UnitCharacter(3, 2, (4,))

    twist = integral_twist(phi, g(1) - AlgebraElement.one(1))

    assert twist.element == g(1) - AlgebraElement.constant(1, 4)
    assert twist.scale == (-1,)
