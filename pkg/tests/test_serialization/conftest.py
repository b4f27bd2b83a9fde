from __future__ import annotations

import pytest

from iwalab.algebra.element import AlgebraElement
from iwalab.ideals.elementary import ElementaryModule
from iwalab.systems.synthesis import from_torsion_module
from tests.test_systems.conftest import GAMMA
from tests.test_systems.conftest import PRIME


@pytest.fixture(scope="session")
def cyclic_system():
    xi = AlgebraElement.generator(1, 0) - AlgebraElement.constant(1, 4)
    return from_torsion_module(ElementaryModule.cyclic(xi), PRIME, GAMMA, 2)
