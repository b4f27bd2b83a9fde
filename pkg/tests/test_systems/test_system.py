from __future__ import annotations

import pytest

from iwalab.systems.exceptions import GammaSystemError
from iwalab.systems.report import validate
from iwalab.systems.system import GammaSystem
from iwalab.systems.system import mutate
from iwalab.systems.system import trivial_system
from tests.test_systems.conftest import GAMMA
from tests.test_systems.conftest import PRIME


def test_orders(cyclic_system):
    assert cyclic_system.max_level == 2
    assert cyclic_system.orders() == [(3, 3), (9, 9), (27, 27)]


def test_pairs(cyclic_system):
    assert list(cyclic_system.pairs()) == [(0, 1), (0, 2), (1, 2)]
    assert cyclic_system.explicit_pairs() == [(0, 1), (1, 2)]


def test_composite_transition(cyclic_system):
    composite = cyclic_system.transition(0, 2)

    assert (composite.m, composite.n) == (0, 2)
    assert composite.k_b.is_surjective()
    assert composite.r_b.is_injective()


def test_identity_transition(cyclic_system):
    identity = cyclic_system.transition(1, 1)

    assert identity.r_a.is_isomorphism()


def test_missing_transition(cyclic_system):
    with pytest.raises(GammaSystemError, match="Missing transition maps"):
        GammaSystem(PRIME, GAMMA, cyclic_system.levels, ())


def test_levels_are_required():
    with pytest.raises(GammaSystemError, match="at least level 0"):
        GammaSystem(PRIME, GAMMA, ())


def test_truncate(cyclic_system):
    truncated = cyclic_system.truncate(1)

    assert truncated.max_level == 1
    assert truncated.orders() == [(3, 3), (9, 9)]


def test_trivial_system_is_valid():
    system = trivial_system(PRIME, GAMMA, 2)

    assert validate(system).passed
    assert system.orders() == [(1, 1)] * 3


def test_mutate_breaks_the_axioms(cyclic_system):
    corrupted = mutate(cyclic_system, 0, 1, "r_b")

    report = validate(corrupted)

    assert not report.passed
    assert not report.axiom_passed("Γ-3")
    assert report.axiom_passed("Γ-1")


@pytest.mark.parametrize(
    "m, n, name, match",
    [
        (0, 2, "r_b", "No explicit transition"),
        (0, 1, "r_c", "Unknown structure map"),
    ],
)
def test_mutate_errors(cyclic_system, m, n, name, match):
    with pytest.raises(GammaSystemError, match=match):
        mutate(cyclic_system, m, n, name)


def test_mutate_entry_out_of_range(cyclic_system):
    with pytest.raises(GammaSystemError, match="outside the 1x1 matrix"):
        mutate(cyclic_system, 0, 1, "k_a", row=1)
