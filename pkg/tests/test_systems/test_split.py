from __future__ import annotations

import pytest

from iwalab.modules.module import ModuleMap
from iwalab.systems.exceptions import SplitError
from iwalab.systems.report import validate
from iwalab.systems.split import idempotent_split
from iwalab.systems.split import product_system
from iwalab.systems.system import trivial_system
from tests.test_systems.conftest import GAMMA
from tests.test_systems.conftest import PRIME


@pytest.fixture(scope="module")
def product(cyclic_system, mod_p_system):
    return product_system(cyclic_system.truncate(1), mod_p_system)


def test_product_is_a_system(product):
    assert product.system.orders() == [(9, 9), (9 * 27, 9 * 27)]
    assert validate(product.system).passed


def test_split_recovers_the_factors(product, cyclic_system, mod_p_system):
    split = idempotent_split(product.system, product.ea, product.eb)

    assert split.first.orders() == cyclic_system.truncate(1).orders()
    assert split.second.orders() == mod_p_system.orders()
    assert split.cross_pairing_vanishes
    assert validate(split.first).passed
    assert validate(split.second).passed


def test_identity_projectors(cyclic_system):
    ea = [ModuleMap.identity(level.a) for level in cyclic_system.levels]
    eb = [ModuleMap.identity(level.b) for level in cyclic_system.levels]

    split = idempotent_split(cyclic_system, ea, eb)

    assert split.first.orders() == cyclic_system.orders()
    assert split.second.orders() == [(1, 1)] * 3


def test_projector_count(cyclic_system):
    with pytest.raises(SplitError, match="One projector per level"):
        idempotent_split(cyclic_system, [], [])


def test_non_idempotent_projectors(cyclic_system):
    ea = [ModuleMap.scalar(level.a, 2) for level in cyclic_system.levels]
    eb = [ModuleMap.identity(level.b) for level in cyclic_system.levels]

    with pytest.raises(SplitError):
        idempotent_split(cyclic_system, ea, eb)


def test_product_needs_matching_systems(cyclic_system):
    with pytest.raises(SplitError, match="same group and levels"):
        product_system(cyclic_system, trivial_system(PRIME, GAMMA, 1))
