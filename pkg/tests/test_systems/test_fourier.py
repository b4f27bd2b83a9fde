from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from iwalab.modules.module import FiniteModule
from iwalab.systems.exceptions import GammaSystemError
from iwalab.systems.fourier import Functional
from iwalab.systems.fourier import delta_e
from iwalab.systems.fourier import fourier_check
from iwalab.systems.fourier import fourier_hat


@pytest.fixture
def module():
    return FiniteModule(3, 1, (9,), ([[4]],))


def test_functional_values_must_respect_orders(module):
    with pytest.raises(GammaSystemError, match="not killed by its order 9"):
        Functional(module, (Fraction(1, 27),))
    with pytest.raises(GammaSystemError, match="1 generators"):
        Functional(module, (0, 0))


def test_functional_evaluation(module):
    f = Functional(module, (Fraction(1, 9),))

    assert f([4]) == Fraction(4, 9)
    assert f([10]) == Fraction(1, 9)


def test_hat_table(module):
    f = Functional(module, (Fraction(1, 9),))

    hat = fourier_hat(f)

    # g^-1 acts by 7, g^-2 by 4
    assert hat.elements == ((0,), (1,), (2,))
    assert hat.table == ((Fraction(1, 9), Fraction(7, 9), Fraction(4, 9)),)


def test_delta_e_inverts_the_hat(module):
    rng = np.random.default_rng(1)

    for _ in range(5):
        f = Functional.random(module, rng)
        assert delta_e(fourier_hat(f)).values == f.values


def test_fourier_checks_pass_on_a_system(cyclic_system):
    report = fourier_check(cyclic_system, samples=5, seed=3)

    assert report.passed
    names = {check.name for check in report}
    assert names == {"round trip", "linearity", "compatibility", "kernel"}


def test_fourier_check_is_reproducible(cyclic_system):
    first = fourier_check(cyclic_system, samples=3, seed=7)
    second = fourier_check(cyclic_system, samples=3, seed=7)

    assert first.checks == second.checks
