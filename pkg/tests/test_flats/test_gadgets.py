from __future__ import annotations

import pytest

from iwalab.algebra.characters import evaluate_character
from iwalab.algebra.element import AlgebraElement
from iwalab.flats.exceptions import FlatError
from iwalab.flats.exceptions import IndependenceError
from iwalab.flats.exceptions import TwistSearchError
from iwalab.flats.flats import FlatLevel
from iwalab.flats.gadgets import construct_phi_pair
from iwalab.flats.gadgets import find_nonsimple_twist
from iwalab.flats.gadgets import independent
from iwalab.flats.zeros import twisted_zero_set
from iwalab.ideals.coprime import coprime_reason


POINT = ((1, 0), (0, 1))


def gamma_minus(value: int, d: int = 1, index: int = 0) -> AlgebraElement:
    return AlgebraElement.generator(d, index) - AlgebraElement.constant(d, value)


def point(targets: tuple[int, int], level: int = 1) -> FlatLevel:
    return FlatLevel(3, level, 2, POINT, targets)


@pytest.mark.parametrize(
    "u, v, expected",
    [
        ((1, 0), (0, 1), True),
        ((1, 1), (2, 2), False),
        ((1, 2), (1, 1), True),
        ((1, 0, 0), (4, 0, 0), False),
    ],
)
def test_independent(u, v, expected):
    assert independent(u, v, 3) is expected


def test_phi_pair_of_the_trivial_point():
    phi_1, phi_2 = construct_phi_pair([point((0, 0))], 3, 2)

    assert phi_1 == gamma_minus(1, d=2)
    assert phi_2 == gamma_minus(1, d=2, index=1)
    assert coprime_reason(phi_1, phi_2, 3) == "distinct simple elements"


def test_phi_pair_vanishes_on_every_flat():
    flats = [point((0, 0)), point((1, 2))]

    pair = construct_phi_pair(flats, 3, 2)

    for flat in flats:
        for omega in flat.characters():
            assert all(evaluate_character(omega, x).is_zero() for x in pair)


def test_phi_pair_of_nothing():
    assert construct_phi_pair([], 3, 2) == (
        AlgebraElement.one(2),
        AlgebraElement.one(2),
    )


def test_phi_pair_needs_codimension_two():
    flat = FlatLevel(3, 1, 2, ((1, 0),), (0,))

    with pytest.raises(FlatError, match="codimension at least 2"):
        construct_phi_pair([flat], 3, 2)


def test_phi_pair_runs_out_of_directions():
    flats = [point((0, 0)), point((1, 0)), point((0, 1))]

    with pytest.raises(IndependenceError, match="6 pairwise independent"):
        construct_phi_pair(flats, 3, 2)


def test_twist_without_simple_factors():
    xi = gamma_minus(1) * gamma_minus(4)

    phi = find_nonsimple_twist(xi, 3, 1, 4)

    assert phi.values == (7,)
    for level in range(3):
        assert twisted_zero_set(phi, xi, level) == []
        assert twisted_zero_set(phi, xi, level, inverse=True) == []


def test_twist_of_a_constant_is_trivial():
    phi = find_nonsimple_twist(AlgebraElement.constant(1, 3), 3, 1, 4)

    assert phi.is_trivial()


@pytest.mark.parametrize(
    "xi, k, message",
    [
        (AlgebraElement.zero(1), 1, "zero element"),
        (gamma_minus(4), 0, "phi = 1 mod 3"),
        (
            AlgebraElement.constant(2, 1)
            + AlgebraElement.generator(2, 0)
            + AlgebraElement.generator(2, 1),
            1,
            "not a polynomial in one monomial",
        ),
    ],
)
def test_twist_search_errors(xi, k, message):
    with pytest.raises(TwistSearchError, match=message):
        find_nonsimple_twist(xi, 3, k, 4)


def test_twist_search_budget():
    with pytest.raises(TwistSearchError, match="within 1 candidates"):
        find_nonsimple_twist(gamma_minus(1), 3, 1, 4, node_budget=1)
