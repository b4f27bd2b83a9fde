from __future__ import annotations

import itertools
import logging

from fractions import Fraction
from typing import Iterator
from typing import Sequence

from sympy import Poly
from sympy import Rational
from sympy import Symbol

from iwalab.algebra.characters import UnitCharacter
from iwalab.algebra.characters import evaluate_character
from iwalab.algebra.element import AlgebraElement
from iwalab.algebra.operations import simple_element
from iwalab.algebra.types import valuation
from iwalab.flats.exceptions import FlatError
from iwalab.flats.exceptions import IndependenceError
from iwalab.flats.exceptions import TwistSearchError
from iwalab.flats.flats import FlatLevel
from iwalab.flats.zeros import DEFAULT_BUDGET
from iwalab.flats.zeros import twisted_zero_set
from iwalab.ideals.elementary import normalize_monomial
from iwalab.ideals.splitting import line_form
from iwalab.modules.isomorphism import DEFAULT_NODE_BUDGET


logger = logging.getLogger(__name__)

_y = Symbol("y")


def independent(u: Sequence[int], v: Sequence[int], p: int) -> bool:
    """Whether some 2x2 minor of the matrix (u, v) is a unit mod p."""
    return any(
        (u[i] * v[j] - u[j] * v[i]) % p
        for i, j in itertools.combinations(range(len(u)), 2)
    )


def _directions(flat: FlatLevel) -> list[tuple[tuple[int, ...], int]]:
    """
    Elements of the span of the flat basis outside Gamma^p, with the value
    exponent every character of the flat takes on them.

    One element per line mod p, fewest nonzero coordinates first.
    """
    modulus = flat.p**flat.level
    k = flat.codimension
    scalars = [
        a
        for a in itertools.product(range(flat.p), repeat=k)
        if any(a) and next(x for x in a if x) == 1
    ]
    scalars.sort(key=lambda a: (sum(1 for x in a if x), [-x for x in a]))
    result = []
    for a in scalars:
        sigma = tuple(
            sum(s * row[i] for s, row in zip(a, flat.basis)) for i in range(flat.d)
        )
        value = sum(s * t for s, t in zip(a, flat.targets)) % modulus
        result.append((sigma, value))
    return result


def _order(value: int, p: int, level: int) -> int:
    """l such that zeta_{p^level}^value has exact order p^l."""
    if value == 0:
        return 0
    return level - valuation(p, value)


def _choose(
    options: Sequence[list[tuple[tuple[int, ...], int]]], p: int
) -> list[tuple[tuple[int, ...], int]] | None:
    """Two directions per flat, all pairwise independent mod p."""
    chosen: list[tuple[tuple[int, ...], int]] = []

    def fits(sigma: tuple[int, ...]) -> bool:
        return all(independent(sigma, other, p) for other, _ in chosen)

    def search(j: int) -> bool:
        if j == len(options):
            return True
        for first, second in itertools.combinations(options[j], 2):
            if not independent(first[0], second[0], p):
                continue
            if fits(first[0]) and fits(second[0]):
                chosen.extend([first, second])
                if search(j + 1):
                    return True
                del chosen[-2:]
        return False

    return chosen if search(0) else None


def construct_phi_pair(
    flats: Sequence[FlatLevel], p: int, d: int
) -> tuple[AlgebraElement, AlgebraElement]:
    """
    Two coprime products of simple elements vanishing on every flat.

    For each flat two directions in the span of its basis are chosen, all of
    them pairwise independent; the simple element attached to a direction and
    to the value the flat takes on it kills every character of the flat.
    """
    if not flats:
        return AlgebraElement.one(d), AlgebraElement.one(d)
    for flat in flats:
        if flat.codimension < 2:
            raise FlatError(
                f"Flat '{flat}' has codimension {flat.codimension}; "
                "codimension at least 2 is required."
            )
    chosen = _choose([_directions(flat) for flat in flats], p)
    if chosen is None:
        raise IndependenceError(
            f"No choice of {2 * len(flats)} pairwise independent directions "
            f"exists modulo {p} for these flats."
        )

    phi = [AlgebraElement.one(d), AlgebraElement.one(d)]
    for index, flat in enumerate(flats):
        for i in range(2):
            sigma, value = chosen[2 * index + i]
            factor = simple_element(sigma, _order(value, p, flat.level), p)
            logger.debug("phi_%s gets %s", i + 1, factor)
            phi[i] = phi[i] * factor

    for flat in flats:
        for omega in flat.characters():
            for x in phi:
                if not evaluate_character(omega, x).is_zero():
                    raise FlatError(f"{x} does not vanish at {omega}.")
    return phi[0], phi[1]


def _root_bound(degree: int, p: int) -> int:
    """
    Largest j such that a root of unity of order p^j lies in an extension of
    degree ``degree`` of Q_p.
    """
    j = 0
    while p**j * (p - 1) <= degree:
        j += 1
    return j


def _avoids_roots_of_unity(coefficients: Sequence[int], u: Fraction, p: int) -> bool:
    """No root of the polynomial is u times a p-power root of unity."""
    power = p ** _root_bound(len(coefficients) - 1, p)
    target = Poly(_y**power - Rational(u.numerator, u.denominator) ** power, _y)
    for coeffs in (coefficients, coefficients[::-1]):
        poly = Poly(list(reversed(coeffs)), _y)
        if poly.resultant(target) == 0:
            return False
    return True


def _candidates(d: int, p: int, k: int, modulus: int) -> Iterator[tuple[int, ...]]:
    """Unit tuples 1 + p^k a, a by growing maximum then lexicographically."""
    for top in itertools.count():
        if 1 + p**k * top >= modulus:
            return
        for a in itertools.product(range(top + 1), repeat=d):
            if max(a, default=0) == top:
                yield tuple(1 + p**k * x for x in a)


def find_nonsimple_twist(
    xi: AlgebraElement,
    p: int,
    k: int,
    precision: int,
    levels: int = 2,
    node_budget: int = DEFAULT_NODE_BUDGET,
    budget: int = DEFAULT_BUDGET,
) -> UnitCharacter:
    """
    A unit character phi = 1 mod p^k making phi*(xi) and its inverse twist
    free of simple divisors.

    ``xi`` must be a polynomial in one monomial g^v. Its roots y are known
    exactly through a resultant, so phi is accepted when no y is
    phi(g^v) times a p-power root of unity, on xi and on its sharp. The
    result is checked again on the twisted zero sets up to ``levels``.
    """
    if xi.is_zero():
        raise TwistSearchError("The zero element has no twist without simple factors.")
    if k < 1 or (p == 2 and k < 2):
        raise TwistSearchError(f"Twists need phi = 1 mod {4 if p == 2 else p}.")
    if normalize_monomial(xi).is_constant():
        return UnitCharacter.trivial(p, precision, xi.d)
    form = line_form(xi)
    if form is None:
        raise TwistSearchError(
            f"{xi} is not a polynomial in one monomial; its simploid factors are "
            "unknown."
        )

    modulus = p**precision
    for tried, values in enumerate(_candidates(xi.d, p, k, modulus)):
        if tried >= node_budget:
            break
        u = Fraction(1)
        for value, e in zip(values, form.direction):
            u *= Fraction(value) ** e
        if not _avoids_roots_of_unity(form.coefficients, u, p):
            continue
        phi = UnitCharacter(p, precision, values)
        logger.debug("Twist %s accepted after %s candidates", phi, tried + 1)
        for level in range(levels + 1):
            for inverse in (False, True):
                zeros = twisted_zero_set(phi, xi, level, budget, inverse=inverse)
                if zeros:
                    raise TwistSearchError(
                        f"Twist by {phi} still vanishes at {zeros[0]}."
                    )
        return phi
    raise TwistSearchError(
        f"No twist 1 mod {p}^{k} found within {node_budget} candidates at "
        f"precision {precision}."
    )
