from __future__ import annotations

import logging

from dataclasses import dataclass

from iwalab.modules.isomorphism import DEFAULT_NODE_BUDGET
from iwalab.modules.isomorphism import IsoVerdict
from iwalab.modules.isomorphism import find_isomorphism
from iwalab.modules.module import FiniteModule
from iwalab.modules.module import Subquotient
from iwalab.systems.report import SIDES
from iwalab.systems.report import CheckResult
from iwalab.systems.report import SystemReport
from iwalab.systems.report import validate
from iwalab.systems.system import GammaSystem
from iwalab.systems.system import Side


logger = logging.getLogger(__name__)


def _image(system: GammaSystem, n: int, side: Side, top: int) -> Subquotient:
    return system.transition(n, top).k(side).image()


@dataclass(frozen=True)
class LevelProfile:
    """Elementary divisors of the images of k_n^N on both sides."""

    level: int
    a: tuple[int, ...]
    b: tuple[int, ...]
    stabilized: bool | None


@dataclass(frozen=True)
class LimitInvariants:
    levels: tuple[LevelProfile, ...]

    @property
    def stabilized(self) -> bool | None:
        """None when there is no level pair to compare."""
        flags = [p.stabilized for p in self.levels if p.stabilized is not None]
        if not flags:
            return None
        return all(flags)


def limit_invariants(system: GammaSystem) -> LimitInvariants:
    """
    Truncated projective limits: the images of k from the top level.

    A level is stabilized when the image from level N has the same profile
    as the image from level N - 1.
    """
    top = system.max_level
    profiles = []
    for n in range(top + 1):
        images = {side: _image(system, n, side, top) for side in SIDES}
        stabilized = None
        if n < top:
            stabilized = all(
                _image(system, n, side, top - 1).module.divisors
                == images[side].module.divisors
                for side in SIDES
            )
        profiles.append(
            LevelProfile(
                n,
                images["a"].module.divisors,
                images["b"].module.divisors,
                stabilized,
            )
        )
    result = LimitInvariants(tuple(profiles))
    if result.stabilized is False:
        logger.warning("Image profiles have not stabilized at level %s", top)
    return result


def sharp_twist(module: FiniteModule) -> FiniteModule:
    """The same group with g acting through g^-1."""
    return module.with_actions([module.inverse_action(i) for i in range(module.d)])


@dataclass(frozen=True)
class FunEqLevel:
    level: int
    divisors_equal: bool
    equivariant: IsoVerdict
    nodes: int
    witness: str | None = None


@dataclass(frozen=True)
class FunEqReport:
    levels: tuple[FunEqLevel, ...]
    invariants: LimitInvariants
    axioms: SystemReport

    @property
    def passed(self) -> bool:
        """
        The system is valid, divisors agree everywhere and no level is proven
        non-isomorphic.
        """
        return self.axioms.passed and all(
            level.divisors_equal and level.equivariant != "not isomorphic"
            for level in self.levels
        )

    def to_report(self) -> SystemReport:
        checks = list(self.axioms.checks)
        for level in self.levels:
            location = f"n={level.level}"
            checks.append(
                CheckResult.judge(
                    "funeq",
                    "divisors",
                    location,
                    None if level.divisors_equal else level.witness,
                )
            )
            proven_different = level.equivariant == "not isomorphic"
            checks.append(
                CheckResult(
                    "funeq",
                    f"equivariant: {level.equivariant}",
                    location,
                    not proven_different,
                    level.witness if proven_different else None,
                )
            )
        return SystemReport(tuple(checks), self.axioms.levels)


def funeq_check(
    system: GammaSystem, node_budget: int = DEFAULT_NODE_BUDGET, jobs: int = 1
) -> FunEqReport:
    """
    Compare the images of k on a with the sharp-twisted images on b.

    Equal elementary divisors are required at every level. The equivariant
    comparison is a verdict per level, "undetermined" when the search budget
    runs out. The axiom checks of ``validate`` lead the report, so a corrupted
    structure map fails it even when the images still match.
    """
    axioms = validate(system, jobs)
    top = system.max_level
    levels = []
    for n in range(top + 1):
        a = _image(system, n, "a", top).module
        b = sharp_twist(_image(system, n, "b", top).module)
        divisors_equal = a.divisors == b.divisors
        search = find_isomorphism(a, b, node_budget)
        witness = None
        if not divisors_equal:
            witness = f"a has divisors {a.divisors}, b has {b.divisors}"
        elif search.verdict != "isomorphic":
            witness = search.reason
        levels.append(
            FunEqLevel(n, divisors_equal, search.verdict, search.nodes, witness)
        )
        logger.debug("Level %s: %s after %s nodes", n, search.verdict, search.nodes)
    return FunEqReport(tuple(levels), limit_invariants(system), axioms)
