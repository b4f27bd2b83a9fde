from __future__ import annotations

import logging
import math

from dataclasses import dataclass
from functools import reduce
from typing import Literal
from typing import Mapping
from typing import NamedTuple
from typing import Optional

from iwalab.algebra.element import AlgebraElement
from iwalab.algebra.operations import sharp
from iwalab.algebra.operations import simple_element
from iwalab.algebra.types import valuation
from iwalab.ideals.elementary import ElementaryModule
from iwalab.ideals.elementary import Factor
from iwalab.ideals.elementary import normalize_monomial
from iwalab.ideals.exceptions import IdealError


logger = logging.getLogger(__name__)

Verdict = Literal["simple", "non-simple", "unknown"]
Tag = Literal["simple", "simploid", "other"]


@dataclass(frozen=True)
class LineForm:
    """
    x = g^offset * sum_j coefficients[j] * (g^direction)^j.

    ``direction`` is a primitive integer vector whose first nonzero entry is
    positive, so it always has an entry prime to p.
    """

    offset: tuple[int, ...]
    direction: tuple[int, ...]
    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1


def _primitive(vector: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    divisor = reduce(math.gcd, vector)
    primitive = tuple(v // divisor for v in vector)
    if next(v for v in primitive if v) < 0:
        return tuple(-v for v in primitive), -divisor
    return primitive, divisor


def line_form(x: AlgebraElement) -> LineForm | None:
    """x as a polynomial in a single monomial, if its support lies on a line."""
    if x.ring.kind == "cyclotomic" or x.is_zero():
        return None
    keys = sorted(x.support())
    offset = keys[0]
    differences = [tuple(a - b for a, b in zip(key, offset)) for key in keys[1:]]
    if not differences:
        return None
    direction, _ = _primitive(differences[0])
    steps = []
    for difference in differences:
        position = next(i for i, v in enumerate(direction) if v)
        step, remainder = divmod(difference[position], direction[position])
        if remainder or any(step * v != w for v, w in zip(direction, difference)):
            return None
        steps.append(step)

    coefficients = [0] * (max(steps) + 1)
    coefficients[0] = int(x.coefficient(offset))  # type: ignore[arg-type]
    for step, key in zip(steps, keys[1:]):
        coefficients[step] = int(x.coefficient(key))  # type: ignore[arg-type]
    return LineForm(offset, direction, tuple(coefficients))


@dataclass(frozen=True)
class SimpleDescriptor:
    """
    x = unit * f_{g^gamma, zeta} with zeta of order p^order.

    ``unit`` is the monomial c * g^offset, c a p-adic unit.
    """

    gamma: tuple[int, ...]
    order: int
    unit: AlgebraElement

    def element(self, p: int) -> AlgebraElement:
        return simple_element(self.gamma, self.order, p)


def _order_of(reduced: list[int], p: int) -> int | None:
    """l in {0, 1} with reduced = c * Phi_{p^l}, ignoring the scalar c."""
    if len(reduced) == 2 and reduced[0] == -reduced[1]:
        return 0
    if len(reduced) == p and len(set(reduced)) == 1:
        return 1
    return None


def simple_descriptor(x: AlgebraElement, p: int) -> SimpleDescriptor | None:
    """
    Recognize x as a unit monomial times Phi_{p^l}(g^gamma).

    None when x is not of that shape, which includes the reducible
    g^(p gamma) - 1.
    """
    form = line_form(x)
    if form is None:
        return None
    powers = [j for j, c in enumerate(form.coefficients) if c]
    step = reduce(math.gcd, powers[1:])
    reduced = list(form.coefficients[::step])
    if any(c == 0 for c in reduced):
        return None
    scale = reduced[-1]
    if valuation(p, scale) != 0:
        return None

    base = _order_of(reduced, p)
    if base is None:
        return None
    depth = valuation(p, step)
    multiplier = step // p**depth
    if base == 0 and depth > 0:
        return None
    gamma = tuple(multiplier * v for v in form.direction)
    unit = AlgebraElement.monomial(form.offset, scale, x.ring)
    return SimpleDescriptor(gamma, base + depth, unit)


def sharp_unit(x: AlgebraElement) -> AlgebraElement | None:
    """The monomial u with sharp(x) = u * x, when there is one."""
    if x.is_zero() or x.ring.kind == "cyclotomic":
        return None
    image = sharp(x)
    key, value = x.terms[0]
    image_key, image_value = image.terms[0]
    numerator, denominator = int(image_value), int(value)  # type: ignore[arg-type]
    if x.ring.kind == "integer":
        scale, remainder = divmod(numerator, denominator)
        if remainder:
            return None
    elif denominator % x.ring.p:
        scale = numerator * pow(denominator, -1, x.ring.modulus)
    else:
        return None
    shift = tuple(a - b for a, b in zip(image_key, key))
    unit = AlgebraElement.monomial(shift, scale, x.ring)
    return unit if unit * x == image else None


def is_sharp_stable(module: ElementaryModule) -> bool:
    """Whether sharp moves every factor by a unit monomial only."""
    return all(sharp_unit(xi) is not None for xi, _ in module.factors)


class FactorVerdict(NamedTuple):
    factor: Factor
    verdict: Verdict
    descriptor: Optional[SimpleDescriptor]


@dataclass(frozen=True)
class SimpleSplit:
    si: ElementaryModule
    ns: ElementaryModule
    verdicts: tuple[FactorVerdict, ...]

    @property
    def unknown(self) -> tuple[FactorVerdict, ...]:
        return tuple(v for v in self.verdicts if v.verdict == "unknown")


def _classify(factor: Factor, p: int, tag: Tag | None) -> FactorVerdict:
    xi = factor.xi
    descriptor = simple_descriptor(xi, p)
    if tag == "simple":
        if descriptor is None:
            logger.warning("%s is tagged simple but is not of simple shape", xi)
        return FactorVerdict(factor, "simple", descriptor)
    if tag in ("simploid", "other"):
        return FactorVerdict(factor, "non-simple", None)
    if tag is not None:
        raise IdealError(f"Unknown factor tag {tag!r}.")

    if descriptor is not None:
        return FactorVerdict(factor, "simple", descriptor)
    if normalize_monomial(xi).is_constant():
        return FactorVerdict(factor, "non-simple", None)
    return FactorVerdict(factor, "unknown", None)


def split_simple(
    module: ElementaryModule, p: int, tags: Mapping[int, Tag] | None = None
) -> SimpleSplit:
    """
    Separate the simple factors of ``module`` from the others.

    ``tags`` overrides detection for the given factor indices. Factors that
    can be neither recognized nor ruled out are "unknown" and go to the
    non-simple part.
    """
    tags = tags or {}
    si, ns, verdicts = [], [], []
    for index, factor in enumerate(module.factors):
        verdict = _classify(factor, p, tags.get(index))
        verdicts.append(verdict)
        if verdict.verdict == "simple":
            si.append(factor)
        else:
            ns.append(factor)
        if verdict.verdict == "unknown":
            logger.warning(
                "Factor %s (%s) is of unknown kind, counted as non-simple",
                index,
                factor.xi,
            )
    return SimpleSplit(
        ElementaryModule(tuple(si)), ElementaryModule(tuple(ns)), tuple(verdicts)
    )


def is_p_power(xi: AlgebraElement, p: int) -> bool:
    """Whether (xi) is a power of (p), xi != unit."""
    x = normalize_monomial(xi)
    if not x.is_constant() or x.ring.kind == "cyclotomic":
        return False
    return valuation(p, int(x.coefficient((0,) * x.d))) > 0  # type: ignore[arg-type]


def split_p(
    module: ElementaryModule, p: int
) -> tuple[ElementaryModule, ElementaryModule]:
    """(p-part, non-p-part) of an elementary module."""
    p_part = tuple(f for f in module.factors if is_p_power(f.xi, p))
    np_part = tuple(f for f in module.factors if not is_p_power(f.xi, p))
    return ElementaryModule(p_part), ElementaryModule(np_part)
