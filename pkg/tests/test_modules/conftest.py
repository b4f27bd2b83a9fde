from __future__ import annotations

import pytest

from iwalab.modules.module import FiniteModule


@pytest.fixture
def twisted():
    """Z/9 with g acting as multiplication by 4."""
    return FiniteModule(3, 1, (9,), ([[4]],))


@pytest.fixture
def trivial():
    return FiniteModule.trivial_action(3, 1, 1, (9,))
