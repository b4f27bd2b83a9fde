from __future__ import annotations

from iwalab.algebra.element import AlgebraElement
from iwalab.systems.report import validate
from iwalab.systems.scalar import scalar_morphism
from iwalab.systems.scalar import scalar_system
from iwalab.systems.scalar import torsion_morphism
from iwalab.systems.scalar import torsion_system
from iwalab.systems.scalar import verify_morphism
from tests.test_systems.conftest import gamma_minus


def test_scalar_system(cyclic_system):
    system = scalar_system(cyclic_system, gamma_minus(1))

    assert system.orders() == [(1, 1), (3, 3), (9, 9)]
    assert validate(system).passed


def test_scalar_by_a_unit_keeps_everything(cyclic_system):
    system = scalar_system(cyclic_system, AlgebraElement.constant(1, 2))

    assert system.orders() == cyclic_system.orders()


def test_torsion_system(cyclic_system):
    system = torsion_system(cyclic_system, gamma_minus(1))

    assert system.orders() == [(3, 3)] * 3
    assert validate(system).passed


def test_canonical_morphisms_are_morphisms(cyclic_system):
    lam = gamma_minus(1)

    assert verify_morphism(torsion_morphism(cyclic_system, lam)).passed
    assert verify_morphism(scalar_morphism(cyclic_system, lam)).passed
