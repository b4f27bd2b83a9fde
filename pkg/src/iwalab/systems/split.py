from __future__ import annotations

import logging

from dataclasses import dataclass
from typing import Sequence

from iwalab.modules.module import DirectSum
from iwalab.modules.module import ModuleMap
from iwalab.modules.module import Subquotient
from iwalab.modules.module import direct_sum
from iwalab.modules.pairing import PairingMatrix
from iwalab.modules.pairing import rational_matrix
from iwalab.modules.smith import identity
from iwalab.systems.derived import restrict_system
from iwalab.systems.exceptions import SplitError
from iwalab.systems.system import GammaSystem
from iwalab.systems.system import SystemLevel
from iwalab.systems.system import Transition


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SplitResult:
    first: GammaSystem
    second: GammaSystem
    cross_pairing_vanishes: bool


def _endomorphism_witness(e: ModuleMap, name: str) -> str | None:
    if not e.source.same_as(e.target):
        return f"{name} is not an endomorphism"
    witness = e.equivariance_witness()
    if witness is not None:
        return f"{name} is not equivariant: {witness}"
    column = e.compose(e).first_difference(e)
    if column is not None:
        return f"{name} is not idempotent on generator {column}"
    return None


def _check_projectors(
    system: GammaSystem, ea: Sequence[ModuleMap], eb: Sequence[ModuleMap]
) -> None:
    if len(ea) != len(system.levels) or len(eb) != len(system.levels):
        raise SplitError("One projector per level and side is required.")
    for level, e, f in zip(system.levels, ea, eb):
        n = level.level
        if not (e.source.same_as(level.a) and f.source.same_as(level.b)):
            raise SplitError(f"The projectors at level {n} act on the wrong modules.")
        for witness in (
            _endomorphism_witness(e, f"ea_{n}"),
            _endomorphism_witness(f, f"eb_{n}"),
        ):
            if witness is not None:
                raise SplitError(witness)
        for i, x in enumerate(level.a.basis()):
            for j, y in enumerate(level.b.basis()):
                if level.pairing.pair(e(x), y) != level.pairing.pair(x, f(y)):
                    raise SplitError(
                        f"<ea a, b> != <a, eb b> at level {n} on generators ({i}, {j})"
                    )

    for n in range(1, len(system.levels)):
        t = system.transition(n - 1, n)
        commuting = (
            ("ea after r", ea[n].compose(t.r_a), t.r_a.compose(ea[n - 1])),
            ("ea after k", ea[n - 1].compose(t.k_a), t.k_a.compose(ea[n])),
            ("eb after r", eb[n].compose(t.r_b), t.r_b.compose(eb[n - 1])),
            ("eb after k", eb[n - 1].compose(t.k_b), t.k_b.compose(eb[n])),
        )
        for name, left, right in commuting:
            column = left.first_difference(right)
            if column is not None:
                raise SplitError(
                    f"{name} does not commute between levels {n - 1} and {n} "
                    f"(generator {column})"
                )


def _complement(e: ModuleMap) -> ModuleMap:
    matrix = identity(e.source.rank) - e.matrix
    return ModuleMap(e.source, e.target, matrix, e.equivariant)


def _cross_vanishes(level: SystemLevel, left: Subquotient, right: Subquotient) -> bool:
    lifts_left, lifts_right = left.inclusion_matrix(), right.inclusion_matrix()
    return all(
        level.pairing.pair(lifts_left[:, i], lifts_right[:, j]) == 0
        for i in range(lifts_left.shape[1])
        for j in range(lifts_right.shape[1])
    )


def idempotent_split(
    system: GammaSystem, ea: Sequence[ModuleMap], eb: Sequence[ModuleMap]
) -> SplitResult:
    """
    Split a system along adjoint idempotents commuting with r and k.

    The first system lives on the images of (ea, eb), the second on the
    images of (1 - ea, 1 - eb).
    """
    _check_projectors(system, ea, eb)
    images = {
        "a1": [e.image() for e in ea],
        "b1": [e.image() for e in eb],
        "a2": [_complement(e).image() for e in ea],
        "b2": [_complement(e).image() for e in eb],
    }
    vanishes = all(
        _cross_vanishes(level, images["a1"][n], images["b2"][n])
        and _cross_vanishes(level, images["a2"][n], images["b1"][n])
        for n, level in enumerate(system.levels)
    )
    first = restrict_system(system, images["a1"], images["b1"])
    second = restrict_system(system, images["a2"], images["b2"])
    logger.debug("Split orders: %s and %s", first.orders(), second.orders())
    return SplitResult(first, second, vanishes)


@dataclass(frozen=True)
class ProductSystem:
    system: GammaSystem
    ea: tuple[ModuleMap, ...]
    eb: tuple[ModuleMap, ...]


def _sum_map(
    source: DirectSum, target: DirectSum, first: ModuleMap, second: ModuleMap
) -> ModuleMap:
    matrix = (
        target.injections[0].compose(first).compose(source.projections[0]).matrix
        + target.injections[1].compose(second).compose(source.projections[1]).matrix
    )
    return ModuleMap(source.module, target.module, matrix)


def _sum_pairing(
    a: DirectSum, b: DirectSum, first: PairingMatrix, second: PairingMatrix
) -> PairingMatrix:
    values = rational_matrix(a.module.rank, b.module.rank)
    for i, x in enumerate(a.module.basis()):
        for j, y in enumerate(b.module.basis()):
            values[i, j] = first.pair(a.projections[0](x), b.projections[0](y)) + (
                second.pair(a.projections[1](x), b.projections[1](y))
            )
    return PairingMatrix(a.module, b.module, values)


def product_system(first: GammaSystem, second: GammaSystem) -> ProductSystem:
    """A x B with the projector pair onto the A factor."""
    if (first.p, first.d, first.max_level) != (second.p, second.d, second.max_level):
        raise SplitError("Products need systems over the same group and levels.")

    sums_a, sums_b, levels = [], [], []
    for x, y in zip(first.levels, second.levels):
        a, b = direct_sum(x.a, y.a), direct_sum(x.b, y.b)
        sums_a.append(a)
        sums_b.append(b)
        pairing = _sum_pairing(a, b, x.pairing, y.pairing)
        levels.append(SystemLevel(x.level, a.module, b.module, pairing))

    transitions = []
    for n in range(1, len(levels)):
        s, t = first.transition(n - 1, n), second.transition(n - 1, n)
        transitions.append(
            Transition(
                n - 1,
                n,
                _sum_map(sums_a[n - 1], sums_a[n], s.r_a, t.r_a),
                _sum_map(sums_b[n - 1], sums_b[n], s.r_b, t.r_b),
                _sum_map(sums_a[n], sums_a[n - 1], s.k_a, t.k_a),
                _sum_map(sums_b[n], sums_b[n - 1], s.k_b, t.k_b),
            )
        )
    system = GammaSystem(first.prime, first.gamma, tuple(levels), tuple(transitions))
    ea = tuple(s.injections[0].compose(s.projections[0]) for s in sums_a)
    eb = tuple(s.injections[0].compose(s.projections[0]) for s in sums_b)
    return ProductSystem(system, ea, eb)
