from __future__ import annotations

import pytest

from iwalab.algebra.element import AlgebraElement


def remark_element() -> AlgebraElement:
    """9 g1 g2 - 8 g1 - 6 g2 + 5, vanishing at the trivial character only."""
    return AlgebraElement(
        2, (((0, 0), 5), ((1, 0), -8), ((0, 1), -6), ((1, 1), 9))
    )


@pytest.fixture
def xi() -> AlgebraElement:
    return remark_element()
