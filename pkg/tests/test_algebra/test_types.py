from __future__ import annotations

from fractions import Fraction

import pytest

from iwalab.algebra.exceptions import AlgebraError
from iwalab.algebra.types import CoefficientRing
from iwalab.algebra.types import GammaSpec
from iwalab.algebra.types import GroupVector
from iwalab.algebra.types import PrimeConfig
from iwalab.algebra.types import valuation


@pytest.mark.parametrize(
    "p, value, expected",
    [(3, 18, 2), (3, -7, 0), (2, Fraction(3, 8), -3), (5, Fraction(25, 3), 2)],
)
def test_valuation(p, value, expected):
    assert valuation(p, value) == expected


def test_valuation_of_zero_fails():
    with pytest.raises(AlgebraError, match="infinite"):
        valuation(3, 0)


def test_prime_config():
    assert PrimeConfig(3, 4).modulus == 81
    with pytest.raises(AlgebraError, match="not a prime"):
        PrimeConfig(4)
    with pytest.raises(AlgebraError, match="Precision"):
        PrimeConfig(3, 0)


def test_gamma_spec_labels():
    assert GammaSpec(2).labels == ("g1", "g2")
    assert GammaSpec(2, ("s", "t")).labels == ("s", "t")
    with pytest.raises(AlgebraError, match="distinct"):
        GammaSpec(2, ("s", "s"))


def test_group_vector_arithmetic():
    u = GroupVector(3, 1, (1, 2))
    v = GroupVector(3, 1, (2, 2))

    assert (u + v).exponents == (0, 1)
    assert (-u).exponents == (2, 1)
    assert u.scale(3).is_identity()
    with pytest.raises(AlgebraError):
        _ = u + GroupVector(3, 2, (1, 2))


def test_all_elements():
    assert len(list(GroupVector.all_elements(2, 2, 2))) == 16


def test_coefficient_ring():
    assert CoefficientRing.modular(3, 2).modulus == 9
    assert not CoefficientRing.modular(3, 2).is_exact
    assert str(CoefficientRing.cyclotomic(5, 1)) == "cyclotomic(5^1)"
    with pytest.raises(AlgebraError):
        _ = CoefficientRing.integer().modulus
