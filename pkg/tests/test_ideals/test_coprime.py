from __future__ import annotations

import pytest

from iwalab.algebra.element import AlgebraElement
from iwalab.ideals.coprime import coprime_reason
from iwalab.ideals.coprime import coprime_simple
from iwalab.ideals.coprime import pseudo_null_certificate
from iwalab.ideals.coprime import same_line
from iwalab.ideals.exceptions import IdealError
from iwalab.ideals.splitting import simple_descriptor
from tests.test_ideals.conftest import gamma_minus
from tests.test_ideals.conftest import phi_3


@pytest.mark.parametrize(
    "u, v, expected",
    [
        ((1, 2), (2, 4), True),
        ((1, 2), (-1, -2), True),
        ((1, 2), (3, 6), False),
        ((1, 2), (2, 1), False),
        ((0, 0), (0, 0), True),
        ((0, 0), (0, 1), False),
    ],
)
def test_same_line(u, v, expected):
    assert same_line(u, v, 3) is expected


def test_coprime_simple():
    trivial = simple_descriptor(gamma_minus(1), 3)
    cubic = simple_descriptor(phi_3(), 3)

    assert coprime_simple(trivial, cubic, 3)
    assert not coprime_simple(trivial, trivial, 3)


@pytest.mark.parametrize(
    "x, y, reason",
    [
        (gamma_minus(1, d=2), gamma_minus(1, d=2, index=1), "distinct simple"),
        (gamma_minus(1), phi_3(), "distinct simple"),
        (AlgebraElement.constant(1, 3), gamma_minus(4), "a power of 3"),
        (gamma_minus(4), AlgebraElement.constant(1, 9), "a power of 3"),
        (gamma_minus(1), gamma_minus(-1), "is a unit"),
    ],
)
def test_coprime_reason(x, y, reason):
    assert reason in coprime_reason(x, y, 3)


@pytest.mark.parametrize(
    "x, y",
    [
        (gamma_minus(1), gamma_minus(1)),
        (gamma_minus(1), gamma_minus(4)),
        (AlgebraElement.constant(1, 3), gamma_minus(1) * 3),
    ],
)
def test_coprime_reason_undecided(x, y):
    assert coprime_reason(x, y, 3) is None


def test_pseudo_null_certificate():
    certificate = pseudo_null_certificate(
        [gamma_minus(1, d=2), gamma_minus(1, d=2), gamma_minus(1, d=2, index=1)], 3
    )

    assert certificate.certified
    assert certificate.pair == (0, 2)
    assert certificate.reason == "distinct simple elements"


def test_pseudo_null_certificate_unknown():
    certificate = pseudo_null_certificate([gamma_minus(1), gamma_minus(4)], 3)

    assert not certificate.certified
    assert certificate.pair is None


def test_pseudo_null_certificate_needs_two_annihilators():
    with pytest.raises(IdealError, match="at least two"):
        pseudo_null_certificate([gamma_minus(1)], 3)
