from __future__ import annotations

import itertools
import logging

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal
from typing import Sequence

from sympy import Poly
from sympy import Symbol

from iwalab.algebra.element import AlgebraElement
from iwalab.algebra.types import valuation
from iwalab.ideals.exceptions import IdealError
from iwalab.ideals.splitting import SimpleDescriptor
from iwalab.ideals.splitting import is_p_power
from iwalab.ideals.splitting import line_form
from iwalab.ideals.splitting import simple_descriptor


logger = logging.getLogger(__name__)

_y = Symbol("y")


def same_line(u: Sequence[int], v: Sequence[int], p: int) -> bool:
    """Whether v = c * u for a p-adic unit c."""
    pivot = next((i for i, e in enumerate(u) if e), None)
    if pivot is None:
        return not any(v)
    ratio = Fraction(v[pivot], u[pivot])
    if ratio == 0 or valuation(p, ratio) != 0:
        return False
    return all(ratio * a == b for a, b in zip(u, v))


def coprime_simple(f: SimpleDescriptor, g: SimpleDescriptor, p: int) -> bool:
    """
    Two simple elements generate the same ideal when their lines and the
    orders of their roots of unity agree; otherwise they are coprime.
    """
    return not (f.order == g.order and same_line(f.gamma, g.gamma, p))


def _has_unit_coefficient(x: AlgebraElement, p: int) -> bool:
    return any(int(c) % p for _, c in x.terms)  # type: ignore[arg-type]


def _resultant(x: AlgebraElement, y: AlgebraElement) -> int | None:
    """Resultant of x and y as polynomials in the same monomial."""
    first, second = line_form(x), line_form(y)
    if first is None or second is None or first.direction != second.direction:
        return None
    polys = [
        Poly(list(reversed(form.coefficients)), _y) for form in (first, second)
    ]
    return int(polys[0].resultant(polys[1]))


def coprime_reason(x: AlgebraElement, y: AlgebraElement, p: int) -> str | None:
    """Why (x) and (y) share no height one prime, or None if undecided."""
    if x.ring.kind != "integer" or y.ring.kind != "integer":
        return None
    f, g = simple_descriptor(x, p), simple_descriptor(y, p)
    if f is not None and g is not None:
        return "distinct simple elements" if coprime_simple(f, g, p) else None
    for first, second in ((x, y), (y, x)):
        if is_p_power(first, p) and _has_unit_coefficient(second, p):
            return f"a power of {p} against an element nonzero modulo {p}"
    resultant = _resultant(x, y)
    if resultant is not None and resultant and valuation(p, resultant) == 0:
        return f"resultant {resultant} is a unit"
    return None


@dataclass(frozen=True)
class PseudoNullCertificate:
    verdict: Literal["certified", "unknown"]
    pair: tuple[int, int] | None = None
    reason: str | None = None

    @property
    def certified(self) -> bool:
        return self.verdict == "certified"


def pseudo_null_certificate(
    annihilators: Sequence[AlgebraElement], p: int
) -> PseudoNullCertificate:
    """
    Certify pseudo-nullity from a list of annihilators.

    Any pair generating coprime ideals certifies it. The checkable fragment
    is small, so "unknown" says nothing about the module.
    """
    if len(annihilators) < 2:
        raise IdealError("A pseudo-null certificate needs at least two annihilators.")
    for i, j in itertools.combinations(range(len(annihilators)), 2):
        reason = coprime_reason(annihilators[i], annihilators[j], p)
        if reason is not None:
            logger.debug("Annihilators %s and %s: %s", i, j, reason)
            return PseudoNullCertificate("certified", (i, j), reason)
    return PseudoNullCertificate("unknown")
