from __future__ import annotations

import itertools

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator
from typing import Sequence

from iwalab.algebra.cyclotomic import CyclotomicInt
from iwalab.algebra.element import AlgebraElement
from iwalab.algebra.exceptions import AlgebraError
from iwalab.algebra.exceptions import RingMismatchError
from iwalab.algebra.types import CoefficientRing
from iwalab.algebra.types import GroupVector
from iwalab.algebra.types import valuation


@dataclass(frozen=True, order=True)
class Character:
    """
    A character of Gamma_n: omega(g_i) = zeta_{p^n}^{c_i}.

    Characters order lexicographically by exponent tuple, which is the
    canonical order used in every report.
    """

    p: int
    level: int
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.level < 0:
            raise AlgebraError(f"Level must be nonnegative, got {self.level}.")
        modulus = self.p**self.level
        object.__setattr__(
            self, "exponents", tuple(int(c) % modulus for c in self.exponents)
        )

    @classmethod
    def trivial(cls, p: int, d: int, level: int = 0) -> Character:
        return cls(p, level, (0,) * d)

    @property
    def d(self) -> int:
        return len(self.exponents)

    @property
    def order_exponent(self) -> int:
        """l such that omega has exact order p^l."""
        nonzero = [c for c in self.exponents if c]
        if not nonzero:
            return 0
        return self.level - min(valuation(self.p, c) for c in nonzero)

    def is_trivial(self) -> bool:
        return not any(self.exponents)

    def value_exponent(self, exponents: Sequence[int]) -> int:
        """e with omega(g^v) = zeta_{p^l}^e, l the exact order exponent."""
        order = self.order_exponent
        total = sum(c * v for c, v in zip(self.exponents, exponents))
        return (total // self.p ** (self.level - order)) % self.p**order

    def inverse(self) -> Character:
        return Character(self.p, self.level, tuple(-c for c in self.exponents))

    def conjugate(self, unit: int) -> Character:
        return Character(self.p, self.level, tuple(unit * c for c in self.exponents))

    def lift(self, level: int) -> Character:
        """The same character seen as a character of a deeper level."""
        if level < self.level:
            raise AlgebraError(
                f"Cannot view a level {self.level} character at level {level}."
            )
        factor = self.p ** (level - self.level)
        return Character(self.p, level, tuple(factor * c for c in self.exponents))

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.exponents) + ")"


@dataclass(frozen=True)
class UnitCharacter:
    """
    A continuous character phi: Gamma -> Z_p^x, known modulo p^precision.

    Values are congruent to 1 modulo p (modulo 4 when p = 2).
    """

    p: int
    precision: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        congruence = 4 if self.p == 2 else self.p
        for value in self.values:
            if (value - 1) % congruence:
                raise AlgebraError(
                    f"Unit character value {value} is not 1 modulo {congruence}."
                )
        object.__setattr__(
            self, "values", tuple(int(v) % self.modulus for v in self.values)
        )

    @classmethod
    def trivial(cls, p: int, precision: int, d: int) -> UnitCharacter:
        return cls(p, precision, (1,) * d)

    @property
    def modulus(self) -> int:
        return int(self.p**self.precision)

    @property
    def d(self) -> int:
        return len(self.values)

    def value(self, exponents: Sequence[int]) -> int:
        """phi(g^v) modulo p^precision."""
        result = 1
        for base, exponent in zip(self.values, exponents):
            result = result * pow(base, exponent, self.modulus) % self.modulus
        return result

    def inverse(self) -> UnitCharacter:
        inverted = tuple(pow(v, -1, self.modulus) for v in self.values)
        return UnitCharacter(self.p, self.precision, inverted)

    def is_trivial(self) -> bool:
        return all(v == 1 % self.modulus for v in self.values)

    def congruence_level(self) -> int:
        """Largest k <= precision with phi(Gamma) inside 1 + p^k Z_p."""
        levels = [
            self.precision if v == 1 % self.modulus else valuation(self.p, v - 1)
            for v in self.values
        ]
        return min([self.precision, *levels])

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.values)


def enumerate_characters(p: int, d: int, level: int) -> Iterator[Character]:
    for exponents in itertools.product(range(p**level), repeat=d):
        yield Character(p, level, exponents)


def evaluate_character(omega: Character, x: AlgebraElement) -> CyclotomicInt:
    if x.d != omega.d:
        raise RingMismatchError(
            f"Character of rank {omega.d} applied to an element of rank {x.d}."
        )

    order = omega.order_exponent
    if x.ring.kind == "cyclotomic":
        if x.ring.p != omega.p:
            raise RingMismatchError("Character and coefficients use different primes.")
        order = max(order, x.ring.exponent)
    lift = omega.p ** (order - omega.order_exponent)

    if x.ring.kind == "cyclotomic":
        result = CyclotomicInt.zero(omega.p, order)
        for exponents, coefficient in x.terms:
            root = CyclotomicInt.root(
                omega.p, order, omega.value_exponent(exponents) * lift
            )
            result = result + coefficient * root  # type: ignore[operator]
        return result

    terms: dict[int, Fraction] = {}
    for exponents, coefficient in x.terms:
        key = omega.value_exponent(exponents) * lift
        value = int(coefficient)  # type: ignore[arg-type]
        terms[key] = terms.get(key, Fraction(0)) + value
    return CyclotomicInt.from_exponents(
        omega.p, order, terms, exact=x.ring.is_exact
    )


def galois_orbit(omega: Character) -> frozenset[Character]:
    order = omega.order_exponent
    units = (u for u in range(1, omega.p**order + 1) if u % omega.p)
    return frozenset(omega.conjugate(u) for u in units)


def galois_representatives(p: int, d: int, level: int) -> list[Character]:
    """One character per Galois orbit of Gamma_level, smallest first."""
    seen: set[Character] = set()
    representatives = []
    for omega in enumerate_characters(p, d, level):
        if omega in seen:
            continue
        orbit = galois_orbit(omega)
        seen.update(orbit)
        representatives.append(omega)
    return representatives


def idempotent(omega: Character) -> AlgebraElement:
    p, level, d = omega.p, omega.level, omega.d
    scale = Fraction(1, p ** (d * level))
    terms = []
    for sigma in GroupVector.all_elements(p, d, level):
        exponent = -sum(c * v for c, v in zip(omega.exponents, sigma.exponents))
        value = CyclotomicInt.root(p, level, exponent).scale(scale)
        terms.append((sigma.exponents, value))
    return AlgebraElement(d, tuple(terms), CoefficientRing.cyclotomic(p, level))
