from __future__ import annotations

import math

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable
from typing import Mapping
from typing import Sequence
from typing import Union

from iwalab.algebra.cyclotomic import CyclotomicInt
from iwalab.algebra.exceptions import AlgebraError
from iwalab.algebra.exceptions import RingMismatchError
from iwalab.algebra.types import INTEGER
from iwalab.algebra.types import CoefficientRing


Coefficient = Union[int, CyclotomicInt]
Exponents = tuple[int, ...]
TermsInput = Union[
    Mapping[Sequence[int], Coefficient], Iterable[tuple[Sequence[int], Coefficient]]
]


def coerce_coefficient(ring: CoefficientRing, value: object) -> Coefficient:
    if ring.kind == "cyclotomic":
        if isinstance(value, CyclotomicInt):
            if value.p != ring.p or value.order > ring.exponent:
                raise RingMismatchError(
                    f"Value of order {value.p}^{value.order} is not in {ring}."
                )
            return value.lift(ring.exponent)
        if isinstance(value, (int, Fraction)):
            return CyclotomicInt.scalar(ring.p, ring.exponent, value)
        raise RingMismatchError(f"Cannot use {value!r} as a {ring} coefficient.")

    if isinstance(value, CyclotomicInt):
        raise RingMismatchError(f"Cyclotomic coefficient in a {ring} element.")
    if isinstance(value, Fraction):
        if value.denominator != 1:
            raise RingMismatchError(f"Non-integral coefficient {value} in {ring}.")
        value = value.numerator
    if not isinstance(value, int):
        raise RingMismatchError(f"Cannot use {value!r} as a {ring} coefficient.")
    if ring.kind == "modular":
        return value % ring.modulus
    return value


def is_zero_coefficient(value: Coefficient) -> bool:
    if isinstance(value, CyclotomicInt):
        return not any(value.coefficients)
    return value == 0


@dataclass(frozen=True)
class AlgebraElement:
    """
    A Laurent polynomial in the generators of Gamma.

    Terms are kept sorted by exponent vector with no zero coefficient. The
    same carrier holds elements of the Iwasawa algebra with finite support,
    of its finite levels (once exponents are reduced) and of the rational
    group algebras (cyclotomic coefficients).
    """

    d: int
    terms: tuple[tuple[Exponents, Coefficient], ...] = ()
    ring: CoefficientRing = INTEGER

    def __post_init__(self) -> None:
        raw = self.terms
        items = raw.items() if isinstance(raw, Mapping) else raw
        collected: dict[Exponents, Coefficient] = {}
        for exponents, value in items:
            key = tuple(int(e) for e in exponents)
            if len(key) != self.d:
                raise AlgebraError(
                    f"Exponent vector {key} does not have length {self.d}."
                )
            coefficient = coerce_coefficient(self.ring, value)
            if key in collected:
                coefficient = coerce_coefficient(
                    self.ring, collected[key] + coefficient  # type: ignore[operator]
                )
            collected[key] = coefficient
        terms = tuple(
            (key, value)
            for key, value in sorted(collected.items())
            if not is_zero_coefficient(value)
        )
        object.__setattr__(self, "terms", terms)

    @classmethod
    def zero(cls, d: int, ring: CoefficientRing = INTEGER) -> AlgebraElement:
        return cls(d, (), ring)

    @classmethod
    def constant(
        cls, d: int, value: Coefficient | Fraction, ring: CoefficientRing = INTEGER
    ) -> AlgebraElement:
        return cls(d, (((0,) * d, value),), ring)  # type: ignore[arg-type]

    @classmethod
    def one(cls, d: int, ring: CoefficientRing = INTEGER) -> AlgebraElement:
        return cls.constant(d, 1, ring)

    @classmethod
    def monomial(
        cls,
        exponents: Sequence[int],
        coefficient: Coefficient = 1,
        ring: CoefficientRing = INTEGER,
    ) -> AlgebraElement:
        return cls(len(exponents), ((tuple(exponents), coefficient),), ring)

    @classmethod
    def generator(cls, d: int, index: int) -> AlgebraElement:
        exponents = [0] * d
        exponents[index] = 1
        return cls.monomial(exponents)

    def as_dict(self) -> dict[Exponents, Coefficient]:
        return dict(self.terms)

    def coefficient(self, exponents: Sequence[int]) -> Coefficient:
        return self.as_dict().get(tuple(exponents), 0)

    def support(self) -> tuple[Exponents, ...]:
        return tuple(key for key, _ in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(key) for key in self.support())

    def variables(self) -> tuple[int, ...]:
        """Indices of the generators the element actually involves."""
        used = {i for key in self.support() for i, e in enumerate(key) if e}
        return tuple(sorted(used))

    def content(self) -> int:
        """gcd of the integer coefficients."""
        if self.ring.kind == "cyclotomic":
            raise RingMismatchError("Content is only defined for integer coefficients.")
        if not self.terms:
            return 0
        return math.gcd(*(int(c) for _, c in self.terms))  # type: ignore[arg-type]

    def to_ring(self, ring: CoefficientRing) -> AlgebraElement:
        if ring == self.ring:
            return self
        if self.ring.kind == "cyclotomic" or (
            self.ring.kind == "modular" and ring.kind != "modular"
        ):
            raise RingMismatchError(f"Cannot convert a {self.ring} element to {ring}.")
        if self.ring.kind == "modular" and ring.exponent > self.ring.exponent:
            raise RingMismatchError(
                f"Cannot raise the precision of a {self.ring} element to {ring}."
            )
        return AlgebraElement(self.d, self.terms, ring)

    def shift(self, exponents: Sequence[int]) -> AlgebraElement:
        """Multiply by the monomial with the given exponents."""
        terms = [
            (tuple(a + b for a, b in zip(key, exponents)), c) for key, c in self.terms
        ]
        return AlgebraElement(self.d, tuple(terms), self.ring)

    def reduce_level(self, p: int, level: int) -> AlgebraElement:
        """Image in the group ring of Gamma_level."""
        modulus = p**level
        return AlgebraElement(
            self.d,
            tuple((tuple(e % modulus for e in key), c) for key, c in self.terms),
            self.ring,
        )

    def _check_compatible(self, other: AlgebraElement) -> None:
        if self.d != other.d:
            raise RingMismatchError(
                f"Elements of ranks {self.d} and {other.d} cannot be combined."
            )
        if self.ring != other.ring:
            raise RingMismatchError(
                f"Elements over {self.ring} and {other.ring} cannot be combined."
            )

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        self._check_compatible(other)
        return AlgebraElement(self.d, self.terms + other.terms, self.ring)

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(
            self.d, tuple((key, -c) for key, c in self.terms), self.ring
        )

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + (-other)

    def __mul__(self, other: AlgebraElement | int) -> AlgebraElement:
        from iwalab.algebra.operations import multiply

        if isinstance(other, int):
            return AlgebraElement(
                self.d, tuple((key, c * other) for key, c in self.terms), self.ring
            )
        return multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> AlgebraElement:
        if exponent < 0:
            raise AlgebraError("Only nonnegative powers are supported.")
        result = AlgebraElement.one(self.d, self.ring)
        for _ in range(exponent):
            result = result * self
        return result

    def format(self, labels: Sequence[str] | None = None) -> str:
        labels = labels or [f"g{i + 1}" for i in range(self.d)]
        if not self.terms:
            return "0"

        parts: list[str] = []
        for key, coefficient in self.terms:
            monomial = "*".join(
                label if e == 1 else f"{label}^{e}"
                for label, e in zip(labels, key)
                if e
            )
            if isinstance(coefficient, CyclotomicInt):
                scalar = f"({coefficient})"
                negative = False
            else:
                negative = coefficient < 0
                scalar = str(abs(coefficient))

            if not monomial:
                body = scalar
            elif scalar == "1":
                body = monomial
            else:
                body = f"{scalar}*{monomial}"

            if not parts:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.format()
