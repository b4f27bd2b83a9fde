from __future__ import annotations

from iwalab.algebra.element import AlgebraElement


def g(*exponents: int) -> AlgebraElement:
    return AlgebraElement.monomial(exponents)


def gamma_minus(value: int, d: int = 1, index: int = 0) -> AlgebraElement:
    return AlgebraElement.generator(d, index) - AlgebraElement.constant(d, value)


def phi_3(d: int = 1, index: int = 0) -> AlgebraElement:
    """1 + g + g^2 in the given variable."""
    x = AlgebraElement.generator(d, index)
    return AlgebraElement.one(d) + x + x * x
