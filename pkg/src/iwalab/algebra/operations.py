from __future__ import annotations

import itertools

from typing import NamedTuple
from typing import Sequence

from iwalab.algebra.characters import UnitCharacter
from iwalab.algebra.cyclotomic import cyclotomic_coefficients
from iwalab.algebra.element import AlgebraElement
from iwalab.algebra.element import Coefficient
from iwalab.algebra.element import Exponents
from iwalab.algebra.exceptions import AlgebraError
from iwalab.algebra.exceptions import AlgebraPreconditionError
from iwalab.algebra.exceptions import RingMismatchError
from iwalab.algebra.types import INTEGER
from iwalab.algebra.types import CoefficientRing


class TwistedElement(NamedTuple):
    element: AlgebraElement
    converted: bool


class IntegralTwist(NamedTuple):
    element: AlgebraElement
    scale: Exponents


def multiply(
    x: AlgebraElement,
    y: AlgebraElement,
    *,
    level: int | None = None,
    p: int | None = None,
) -> AlgebraElement:
    """
    Product of two group ring elements.

    With ``level`` the exponents are reduced modulo p^level, which is the
    product in the finite group ring of Gamma_level.
    """
    x._check_compatible(y)
    if level is not None:
        p = p or x.ring.p
        if not p:
            raise AlgebraError("Multiplying at a level requires the prime p.")

    terms: dict[Exponents, Coefficient] = {}
    for a, c in x.terms:
        for b, e in y.terms:
            key = tuple(i + j for i, j in zip(a, b))
            if level is not None:
                key = tuple(k % p**level for k in key)  # type: ignore[operator]
            product = c * e  # type: ignore[operator]
            previous = terms.get(key)
            terms[key] = product if previous is None else previous + product
    return AlgebraElement(x.d, tuple(terms.items()), x.ring)


def sharp(x: AlgebraElement) -> AlgebraElement:
    return AlgebraElement(
        x.d, tuple((tuple(-e for e in key), c) for key, c in x.terms), x.ring
    )


def simple_element(gamma: Sequence[int], order: int, p: int) -> AlgebraElement:
    """f_{gamma, zeta} for zeta of order p^order: Phi_{p^order}(gamma)."""
    if order < 0:
        raise AlgebraPreconditionError(f"Order must be nonnegative, got {order}.")
    if all(e % p == 0 for e in gamma):
        raise AlgebraPreconditionError(
            f"{tuple(gamma)} lies in Gamma^p, no simple element is attached to it."
        )
    terms = [
        (tuple(j * e for e in gamma), c)
        for j, c in enumerate(cyclotomic_coefficients(p, order))
    ]
    return AlgebraElement(len(gamma), tuple(terms))


def norm_element(p: int, d: int, n: int, m: int) -> AlgebraElement:
    """Sum of the kernel of Gamma_n -> Gamma_m, as an element of the level n ring."""
    if n < m:
        raise AlgebraError(f"Norm from level {n} to level {m} needs n >= m.")
    step = p**m
    terms = [
        (tuple(step * j for j in index), 1)
        for index in itertools.product(range(p ** (n - m)), repeat=d)
    ]
    return AlgebraElement(d, tuple(terms))


def augmentation_power(p: int, d: int, index: int, level: int) -> AlgebraElement:
    """g_index^(p^level) - 1."""
    exponents = [0] * d
    exponents[index] = p**level
    return AlgebraElement.monomial(exponents) - AlgebraElement.one(d)


def in_level_ideal(x: AlgebraElement, p: int, level: int) -> bool:
    """Membership in I_level, the kernel of reduction to Gamma_level."""
    return x.reduce_level(p, level).is_zero()


def norm_identity_holds(p: int, d: int, n: int, m: int) -> bool:
    norm = norm_element(p, d, n, m)
    return all(
        in_level_ideal(multiply(norm, augmentation_power(p, d, i, m)), p, n)
        for i in range(d)
    )


def _twist_ring(phi: UnitCharacter, x: AlgebraElement) -> tuple[CoefficientRing, bool]:
    ring = CoefficientRing.modular(phi.p, phi.precision)
    if x.ring.kind == "integer":
        return ring, True
    if x.ring != ring:
        raise RingMismatchError(f"Cannot twist a {x.ring} element modulo {ring}.")
    return ring, False


def twist_endo(
    phi: UnitCharacter, x: AlgebraElement, inverse: bool = False
) -> TwistedElement:
    """
    Apply the ring endomorphism g -> phi(g)^-1 g (or g -> phi(g) g).

    Integer coefficients are reduced modulo p^precision first; the result
    says whether that conversion happened.
    """
    if phi.d != x.d:
        raise RingMismatchError(
            f"Unit character of rank {phi.d} applied to an element of rank {x.d}."
        )
    ring, converted = _twist_ring(phi, x)
    sign = 1 if inverse else -1
    terms = [
        (key, int(c) * phi.value([sign * e for e in key]))  # type: ignore[arg-type]
        for key, c in x.terms
    ]
    return TwistedElement(AlgebraElement(x.d, tuple(terms), ring), converted)


def integral_twist(
    phi: UnitCharacter, x: AlgebraElement, inverse: bool = False
) -> IntegralTwist:
    """
    An integer element equal to the twist of ``x`` up to a unit monomial scalar.

    The values of ``phi`` are used as exact integers, so character zeros of
    the twist are decided exactly.
    """
    if x.ring != INTEGER:
        raise RingMismatchError("Exact twists need integer coefficients.")
    if phi.d != x.d:
        raise RingMismatchError(
            f"Unit character of rank {phi.d} applied to an element of rank {x.d}."
        )
    sign = 1 if inverse else -1
    powers = {key: [sign * e for e in key] for key in x.support()}
    scale = tuple(
        min((power[i] for power in powers.values()), default=0) for i in range(x.d)
    )
    terms = []
    for key, c in x.terms:
        value = int(c)  # type: ignore[arg-type]
        for u, power, offset in zip(phi.values, powers[key], scale):
            value *= u ** (power - offset)
        terms.append((key, value))
    return IntegralTwist(AlgebraElement(x.d, tuple(terms)), scale)
