from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple
from typing import Sequence

from iwalab.algebra.characters import UnitCharacter
from iwalab.algebra.characters import enumerate_characters
from iwalab.algebra.characters import evaluate_character
from iwalab.algebra.element import AlgebraElement
from iwalab.algebra.operations import sharp
from iwalab.algebra.operations import twist_endo
from iwalab.algebra.types import CoefficientRing
from iwalab.algebra.types import valuation
from iwalab.ideals.exceptions import IdealError


class Factor(NamedTuple):
    xi: AlgebraElement
    r: int


@dataclass(frozen=True)
class ElementaryModule:
    """The direct sum of Lambda / (xi_i^r_i) over the factors."""

    factors: tuple[Factor, ...] = ()

    def __post_init__(self) -> None:
        factors = tuple(Factor(xi, int(r)) for xi, r in self.factors)
        for index, (xi, r) in enumerate(factors):
            if xi.is_zero():
                raise IdealError(f"Factor {index} is zero.")
            if r < 1:
                raise IdealError(f"Factor {index} has multiplicity {r}, expected >= 1.")
        if len({xi.d for xi, _ in factors}) > 1:
            raise IdealError("Factors live over groups of different ranks.")
        object.__setattr__(self, "factors", factors)

    @classmethod
    def cyclic(cls, xi: AlgebraElement, r: int = 1) -> ElementaryModule:
        return cls((Factor(xi, r),))

    @property
    def d(self) -> int | None:
        return self.factors[0].xi.d if self.factors else None

    def is_zero(self) -> bool:
        return not self.factors

    def direct_sum(self, other: ElementaryModule) -> ElementaryModule:
        return ElementaryModule(self.factors + other.factors)

    def powers(self) -> list[AlgebraElement]:
        """The relations xi_i^r_i."""
        return [xi**r for xi, r in self.factors]

    def __len__(self) -> int:
        return len(self.factors)


@dataclass(frozen=True)
class IdealDescriptor:
    """A principal ideal kept as its factored generator."""

    factors: tuple[Factor, ...] = ()

    def is_unit(self) -> bool:
        return not self.factors

    def generator(self, d: int) -> AlgebraElement:
        result = AlgebraElement.one(d)
        for xi, r in self.factors:
            if result.ring != xi.ring:
                result = result.to_ring(xi.ring)
            result = result * xi**r
        return result

    def __mul__(self, other: IdealDescriptor) -> IdealDescriptor:
        return IdealDescriptor(self.factors + other.factors)

    def format(self, labels: Sequence[str] | None = None) -> str:
        if self.is_unit():
            return "(1)"
        parts = []
        for xi, r in self.factors:
            body = f"({xi.format(labels)})"
            parts.append(body if r == 1 else f"{body}^{r}")
        return "*".join(parts)


def chi(module: ElementaryModule) -> IdealDescriptor:
    return IdealDescriptor(module.factors)


def sharp_ideal(ideal: IdealDescriptor) -> IdealDescriptor:
    return IdealDescriptor(tuple(Factor(sharp(xi), r) for xi, r in ideal.factors))


def twist_ideal(
    ideal: IdealDescriptor, phi: UnitCharacter, inverse: bool = False
) -> IdealDescriptor:
    """Apply phi* (or its inverse) factor by factor, modulo p^precision."""
    return IdealDescriptor(
        tuple(
            Factor(twist_endo(phi, xi, inverse).element, r) for xi, r in ideal.factors
        )
    )


def normalize_monomial(x: AlgebraElement) -> AlgebraElement:
    """x divided by the largest monomial dividing it."""
    if x.is_zero():
        return x
    lowest = [min(key[i] for key in x.support()) for i in range(x.d)]
    return x.shift([-e for e in lowest])


def _integer(x: AlgebraElement, key: tuple[int, ...]) -> int:
    return int(x.coefficient(key))  # type: ignore[arg-type]


def _scalar_ratio_exact(x: AlgebraElement, y: AlgebraElement, p: int) -> bool:
    if x.support() != y.support():
        return False
    key, value = x.terms[0]
    ratio = Fraction(int(y.coefficient(key)), int(value))  # type: ignore[arg-type]
    if valuation(p, ratio) != 0:
        return False
    return all(
        Fraction(int(y.coefficient(k)), 1) == ratio * int(c)  # type: ignore[arg-type]
        for k, c in x.terms
    )


def _scalar_ratio_modular(
    x: AlgebraElement, y: AlgebraElement, p: int
) -> bool | None:
    modulus = x.ring.modulus
    lowest, key = min(
        (valuation(p, int(c)), k) for k, c in x.terms  # type: ignore[arg-type]
    )
    precision = modulus // p**lowest
    if precision == 1:
        return None
    pivot = int(y.coefficient(key))  # type: ignore[arg-type]
    if pivot % p**lowest:
        return False
    base = int(x.coefficient(key)) // p**lowest  # type: ignore[arg-type]
    unit = (pivot // p**lowest) * pow(base, -1, precision) % precision
    if unit % p == 0:
        return False
    keys = set(x.support()) | set(y.support())
    return all((_integer(y, k) - unit * _integer(x, k)) % modulus == 0 for k in keys)


def _valuation_profile(
    x: AlgebraElement, p: int, level: int
) -> list[Fraction | None]:
    profile: list[Fraction | None] = []
    for omega in enumerate_characters(p, x.d, level):
        value = evaluate_character(omega, x)
        profile.append(None if value.is_zero() else value.valuation())
    return profile


def associate(
    x: AlgebraElement, y: AlgebraElement, p: int, probe_level: int = 1
) -> bool | None:
    """
    Whether (x) = (y), up to a unit monomial and a unit scalar.

    True when such a unit is found. False when the p-adic valuations of the
    two elements differ at some character of level <= ``probe_level`` (units
    have valuation zero everywhere). None otherwise, and None whenever the
    available precision cannot separate the two.
    """
    if x.d != y.d:
        raise IdealError("Elements of different ranks are never compared.")
    if x.ring.kind == "cyclotomic" or y.ring.kind == "cyclotomic":
        raise IdealError("Ideals are compared over integral coefficients only.")
    if x.ring.kind == "modular" or y.ring.kind == "modular":
        ring = x.ring if x.ring.kind == "modular" else y.ring
        if x.ring.kind == y.ring.kind == "modular" and x.ring != y.ring:
            ring = min(x.ring, y.ring, key=lambda r: r.exponent)
        return _associate_modular(x, y, p, ring)

    if x.is_zero() or y.is_zero():
        return x.is_zero() and y.is_zero()
    x, y = normalize_monomial(x), normalize_monomial(y)
    if _scalar_ratio_exact(x, y, p):
        return True
    for level in range(probe_level + 1):
        if _valuation_profile(x, p, level) != _valuation_profile(y, p, level):
            return False
    return None


def _associate_modular(
    x: AlgebraElement, y: AlgebraElement, p: int, ring: CoefficientRing
) -> bool | None:
    x = AlgebraElement(x.d, x.terms, ring) if x.ring != ring else x
    y = AlgebraElement(y.d, y.terms, ring) if y.ring != ring else y
    if x.is_zero() or y.is_zero():
        return None
    x, y = normalize_monomial(x), normalize_monomial(y)
    verdict = _scalar_ratio_modular(x, y, p)
    return None if verdict is False else verdict
