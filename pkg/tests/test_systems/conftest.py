from __future__ import annotations

import pytest

from iwalab.algebra.element import AlgebraElement
from iwalab.algebra.types import GammaSpec
from iwalab.algebra.types import PrimeConfig
from iwalab.ideals.elementary import ElementaryModule
from iwalab.systems.synthesis import from_torsion_module


PRIME = PrimeConfig(3, 4)
GAMMA = GammaSpec(1)


def gamma_minus(value: int, d: int = 1) -> AlgebraElement:
    return AlgebraElement.generator(d, 0) - AlgebraElement.constant(d, value)


@pytest.fixture(scope="session")
def cyclic_system():
    """Lambda / (g - 1 - p) over Z_3, levels 0..2."""
    return from_torsion_module(
        ElementaryModule.cyclic(gamma_minus(4)), PRIME, GAMMA, 2
    )


@pytest.fixture(scope="session")
def mod_p_system():
    """Lambda / (p) over Z_3, levels 0..1."""
    module = ElementaryModule.cyclic(AlgebraElement.constant(1, 3))
    return from_torsion_module(module, PRIME, GAMMA, 1)
