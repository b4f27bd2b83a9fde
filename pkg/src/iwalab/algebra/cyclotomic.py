from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable
from typing import Mapping
from typing import Union

from sympy import QQ
from sympy import Poly
from sympy import Rational
from sympy import Symbol
from sympy import cyclotomic_poly
from sympy import totient

from iwalab.algebra.exceptions import AlgebraError
from iwalab.algebra.exceptions import InexactValueError
from iwalab.algebra.types import valuation


Scalar = Union[int, Fraction]

_x = Symbol("x")


@lru_cache(maxsize=None)
def cyclotomic_degree(p: int, order: int) -> int:
    return int(totient(p**order))


@lru_cache(maxsize=None)
def cyclotomic_coefficients(p: int, order: int) -> tuple[int, ...]:
    """Coefficients of Phi_{p^order}, constant term first."""
    poly = Poly(cyclotomic_poly(p**order, _x), _x)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


def _reduce(p: int, order: int, terms: Mapping[int, Fraction]) -> tuple[Fraction, ...]:
    # x^{p^l} = 1, then x^e = -(x^{e-q} + ... + x^{e-(p-1)q}) for e >= phi
    size = p**order
    if order == 0:
        return (sum(terms.values(), Fraction(0)),)

    step = size // p
    degree = size - step
    vector = [Fraction(0)] * size
    for exponent, coefficient in terms.items():
        vector[exponent % size] += coefficient

    for exponent in range(size - 1, degree - 1, -1):
        coefficient = vector[exponent]
        if coefficient:
            vector[exponent] = Fraction(0)
            for j in range(1, p):
                vector[exponent - j * step] -= coefficient

    return tuple(vector[:degree])


@dataclass(frozen=True)
class CyclotomicInt:
    """
    A value in Q(zeta) for zeta a primitive p^order-th root of unity.

    Coefficients are exact rationals on the power basis 1, zeta, ...,
    zeta^(phi(p^order) - 1). Values coming from a reduced coefficient ring are
    carried with ``exact=False`` and refuse zero tests.
    """

    p: int
    order: int
    coefficients: tuple[Fraction, ...]
    exact: bool = True

    def __post_init__(self) -> None:
        coefficients = tuple(Fraction(c) for c in self.coefficients)
        if len(coefficients) != cyclotomic_degree(self.p, self.order):
            raise AlgebraError(
                f"A value of order {self.p}^{self.order} needs "
                f"{cyclotomic_degree(self.p, self.order)} coefficients, "
                f"got {len(coefficients)}."
            )
        object.__setattr__(self, "coefficients", coefficients)

    @classmethod
    def from_exponents(
        cls,
        p: int,
        order: int,
        terms: Mapping[int, Scalar] | Iterable[tuple[int, Scalar]],
        exact: bool = True,
    ) -> CyclotomicInt:
        items = terms.items() if isinstance(terms, Mapping) else terms
        collected: dict[int, Fraction] = {}
        for exponent, coefficient in items:
            collected[exponent] = collected.get(exponent, Fraction(0)) + Fraction(
                coefficient
            )
        return cls(p, order, _reduce(p, order, collected), exact)

    @classmethod
    def zero(cls, p: int, order: int = 0) -> CyclotomicInt:
        return cls(p, order, (0,) * cyclotomic_degree(p, order))

    @classmethod
    def scalar(cls, p: int, order: int, value: Scalar) -> CyclotomicInt:
        return cls.from_exponents(p, order, {0: value})

    @classmethod
    def root(cls, p: int, order: int, exponent: int = 1) -> CyclotomicInt:
        return cls.from_exponents(p, order, {exponent: 1})

    @property
    def degree(self) -> int:
        return len(self.coefficients)

    def exponents(self) -> dict[int, Fraction]:
        return {i: c for i, c in enumerate(self.coefficients) if c}

    def is_zero(self) -> bool:
        if not self.exact:
            raise InexactValueError(
                "Zero test refused on a value computed from reduced coefficients."
            )
        return not any(self.coefficients)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coefficients)

    def lift(self, order: int) -> CyclotomicInt:
        if order < self.order:
            raise AlgebraError(
                f"Cannot lift a value of order {self.order} down to {order}."
            )
        if order == self.order:
            return self
        factor = self.p ** (order - self.order)
        terms = {i * factor: c for i, c in self.exponents().items()}
        return CyclotomicInt.from_exponents(self.p, order, terms, self.exact)

    def _align(self, other: CyclotomicInt) -> tuple[CyclotomicInt, CyclotomicInt]:
        if self.p != other.p:
            raise AlgebraError("Cyclotomic values over different primes.")
        order = max(self.order, other.order)
        return self.lift(order), other.lift(order)

    def _coerce(self, other: CyclotomicInt | Scalar) -> CyclotomicInt:
        if isinstance(other, CyclotomicInt):
            return other
        return CyclotomicInt.scalar(self.p, self.order, other)

    def __add__(self, other: CyclotomicInt | Scalar) -> CyclotomicInt:
        left, right = self._align(self._coerce(other))
        pairs = zip(left.coefficients, right.coefficients)
        coefficients = tuple(a + b for a, b in pairs)
        exact = left.exact and right.exact
        return CyclotomicInt(left.p, left.order, coefficients, exact)

    __radd__ = __add__

    def __neg__(self) -> CyclotomicInt:
        return CyclotomicInt(
            self.p, self.order, tuple(-c for c in self.coefficients), self.exact
        )

    def __sub__(self, other: CyclotomicInt | Scalar) -> CyclotomicInt:
        return self + (-self._coerce(other))

    def __rsub__(self, other: Scalar) -> CyclotomicInt:
        return self._coerce(other) - self

    def __mul__(self, other: CyclotomicInt | Scalar) -> CyclotomicInt:
        if not isinstance(other, CyclotomicInt):
            return self.scale(other)
        left, right = self._align(other)
        terms: dict[int, Fraction] = {}
        for i, a in left.exponents().items():
            for j, b in right.exponents().items():
                terms[i + j] = terms.get(i + j, Fraction(0)) + a * b
        return CyclotomicInt(
            left.p,
            left.order,
            _reduce(left.p, left.order, terms),
            left.exact and right.exact,
        )

    __rmul__ = __mul__

    def scale(self, factor: Scalar) -> CyclotomicInt:
        factor = Fraction(factor)
        return CyclotomicInt(
            self.p, self.order, tuple(factor * c for c in self.coefficients), self.exact
        )

    def conjugate(self, unit: int) -> CyclotomicInt:
        """Image under the Galois automorphism zeta -> zeta^unit."""
        if unit % self.p == 0:
            raise AlgebraError(f"{unit} is not a unit modulo {self.p}.")
        terms = {i * unit: c for i, c in self.exponents().items()}
        return CyclotomicInt.from_exponents(self.p, self.order, terms, self.exact)

    def norm(self) -> Fraction:
        """Norm down to Q, as the resultant with the cyclotomic polynomial."""
        modulus = Poly(cyclotomic_poly(self.p**self.order, _x), _x, domain=QQ)
        value = Poly(
            [Rational(c.numerator, c.denominator) for c in reversed(self.coefficients)],
            _x,
            domain=QQ,
        )
        result = Rational(modulus.resultant(value))
        return Fraction(int(result.p), int(result.q))

    def valuation(self) -> Fraction:
        """Normalized p-adic valuation, v_p(p) = 1."""
        if self.is_zero():
            raise AlgebraError("The valuation of zero is infinite.")
        return Fraction(
            valuation(self.p, self.norm()), cyclotomic_degree(self.p, self.order)
        )

    def __str__(self) -> str:
        if self.order == 0:
            return str(self.coefficients[0])
        parts = []
        for i, c in self.exponents().items():
            power = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if not power:
                parts.append(str(c))
            elif c == 1:
                parts.append(power)
            elif c == -1:
                parts.append(f"-{power}")
            else:
                parts.append(f"{c}*{power}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"
