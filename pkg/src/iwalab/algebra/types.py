from __future__ import annotations

import itertools

from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction
from typing import Iterator
from typing import Literal

from sympy import isprime
from sympy import multiplicity

from iwalab.algebra.exceptions import AlgebraError


RingKind = Literal["integer", "modular", "cyclotomic"]


def valuation(p: int, value: int | Fraction) -> int:
    """p-adic valuation of a nonzero rational."""
    value = Fraction(value)
    if value == 0:
        raise AlgebraError("The valuation of zero is infinite.")
    return int(multiplicity(p, abs(value.numerator))) - int(
        multiplicity(p, value.denominator)
    )


@dataclass(frozen=True)
class PrimeConfig:
    p: int
    precision: int = 1

    def __post_init__(self) -> None:
        if not isprime(self.p):
            raise AlgebraError(f"{self.p} is not a prime.")
        if self.precision < 1:
            raise AlgebraError(f"Precision must be at least 1, got {self.precision}.")

    @property
    def modulus(self) -> int:
        return int(self.p**self.precision)


@dataclass(frozen=True)
class GammaSpec:
    d: int
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.d < 1:
            raise AlgebraError(f"The rank of Gamma must be at least 1, got {self.d}.")
        if not self.labels:
            object.__setattr__(
                self, "labels", tuple(f"g{i + 1}" for i in range(self.d))
            )
        if len(self.labels) != self.d or len(set(self.labels)) != self.d:
            raise AlgebraError("Gamma basis labels must be distinct, one per rank.")


@dataclass(frozen=True, order=True)
class GroupVector:
    """An element of Gamma_n, exponents reduced to [0, p^n)."""

    p: int
    level: int
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.level < 0:
            raise AlgebraError(f"Level must be nonnegative, got {self.level}.")
        modulus = self.p**self.level
        object.__setattr__(
            self, "exponents", tuple(int(e) % modulus for e in self.exponents)
        )

    @property
    def d(self) -> int:
        return len(self.exponents)

    def __add__(self, other: GroupVector) -> GroupVector:
        self._check_compatible(other)
        exponents = tuple(a + b for a, b in zip(self.exponents, other.exponents))
        return GroupVector(self.p, self.level, exponents)

    def __neg__(self) -> GroupVector:
        return GroupVector(self.p, self.level, tuple(-e for e in self.exponents))

    def scale(self, factor: int) -> GroupVector:
        exponents = tuple(factor * e for e in self.exponents)
        return GroupVector(self.p, self.level, exponents)

    def is_identity(self) -> bool:
        return not any(self.exponents)

    def _check_compatible(self, other: GroupVector) -> None:
        if (self.p, self.level, self.d) != (other.p, other.level, other.d):
            raise AlgebraError("Group elements live in different groups.")

    @classmethod
    def all_elements(cls, p: int, d: int, level: int) -> Iterator[GroupVector]:
        """All of Gamma_n in lexicographic order."""
        for exponents in itertools.product(range(p**level), repeat=d):
            yield cls(p, level, exponents)


@dataclass(frozen=True)
class CoefficientRing:
    kind: RingKind = "integer"
    p: int = 0
    exponent: int = 0

    @classmethod
    def integer(cls) -> CoefficientRing:
        return cls("integer")

    @classmethod
    def modular(cls, p: int, precision: int) -> CoefficientRing:
        return cls("modular", p, precision)

    @classmethod
    def cyclotomic(cls, p: int, order: int) -> CoefficientRing:
        return cls("cyclotomic", p, order)

    @property
    def modulus(self) -> int:
        if self.kind != "modular":
            raise AlgebraError(f"A {self.kind} ring has no modulus.")
        return int(self.p**self.exponent)

    @property
    def is_exact(self) -> bool:
        return self.kind != "modular"

    def __str__(self) -> str:
        if self.kind == "modular":
            return f"mod {self.p}^{self.exponent}"
        if self.kind == "cyclotomic":
            return f"cyclotomic({self.p}^{self.exponent})"
        return "integer"


INTEGER = CoefficientRing.integer()
