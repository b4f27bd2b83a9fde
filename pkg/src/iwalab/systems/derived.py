from __future__ import annotations

import logging

from dataclasses import dataclass
from typing import NamedTuple
from typing import Sequence

from iwalab.algebra.element import AlgebraElement
from iwalab.algebra.operations import sharp
from iwalab.modules.exceptions import ModuleMapError
from iwalab.modules.module import ModuleMap
from iwalab.modules.module import Subquotient
from iwalab.modules.module import induced_map
from iwalab.modules.operations import action_matrix
from iwalab.modules.pairing import PairingMatrix
from iwalab.modules.smith import identity
from iwalab.systems.exceptions import StabilityError
from iwalab.systems.system import MAP_NAMES
from iwalab.systems.system import GammaSystem
from iwalab.systems.system import SystemLevel
from iwalab.systems.system import Transition


logger = logging.getLogger(__name__)


def restrict_system(
    system: GammaSystem,
    a_parts: Sequence[Subquotient],
    b_parts: Sequence[Subquotient],
    pairings: Sequence[PairingMatrix] | None = None,
) -> GammaSystem:
    """
    The system induced on level-wise subquotients of a_n and b_n.

    Pairings are evaluated on representatives unless given, and structure
    maps are the induced maps; a map leaving a subquotient raises
    StabilityError.
    """
    count = len(system.levels)
    if len(a_parts) != count or len(b_parts) != count:
        raise StabilityError("One subquotient per level and side is required.")

    levels = []
    for n, (level, a, b) in enumerate(zip(system.levels, a_parts, b_parts)):
        if pairings is None:
            pairing = level.pairing.restrict(a, b)
        else:
            pairing = pairings[n]
        levels.append(SystemLevel(level.level, a.module, b.module, pairing))

    transitions = []
    for n in range(1, len(levels)):
        transition = system.transition(n - 1, n)
        parts = {
            "r_a": (a_parts[n - 1], a_parts[n]),
            "r_b": (b_parts[n - 1], b_parts[n]),
            "k_a": (a_parts[n], a_parts[n - 1]),
            "k_b": (b_parts[n], b_parts[n - 1]),
        }
        maps = {}
        for name in MAP_NAMES:
            source, target = parts[name]
            try:
                maps[name] = induced_map(transition.get(name), source, target)
            except ModuleMapError as e:
                raise StabilityError(
                    f"{name} between levels {n - 1} and {n} leaves the family: "
                    f"{e.message}"
                ) from e
        transitions.append(Transition(n - 1, n, **maps))

    return GammaSystem(system.prime, system.gamma, tuple(levels), tuple(transitions))


@dataclass(frozen=True)
class KernelLevel:
    """a_n^0 and b_n^0, with whether the kernels were already stable."""

    level: int
    a: Subquotient
    b: Subquotient
    stabilized: bool | None

    @property
    def order(self) -> tuple[int, int]:
        return self.a.order, self.b.order


def kernel_system(system: GammaSystem) -> tuple[KernelLevel, ...]:
    """
    Ker(r_n^N) on both sides at every level n.

    Kernels grow with the target level, so the kernel at the top level is the
    union over the available levels. ``stabilized`` compares it with
    Ker(r_n^(N-1)); it is None at the top level, whose kernel is zero.
    """
    top = system.max_level
    result = []
    for n in range(top + 1):
        if n == top:
            level = system.level(n)
            zero_a = Subquotient(level.a, identity(level.a.rank)[:, :0])
            zero_b = Subquotient(level.b, identity(level.b.rank)[:, :0])
            result.append(KernelLevel(n, zero_a, zero_b, None))
            continue

        transition = system.transition(n, top)
        a, b = transition.r_a.kernel(), transition.r_b.kernel()
        previous = system.transition(n, top - 1)
        stabilized = (
            previous.r_a.kernel().order == a.order
            and previous.r_b.kernel().order == b.order
        )
        if not stabilized:
            logger.warning(
                "Kernels at level %s are still growing at level %s", n, top
            )
        result.append(KernelLevel(n, a, b, stabilized))
    return tuple(result)


def _check_stable(system: GammaSystem, c: Sequence[Subquotient]) -> None:
    for part in c:
        if part.denominator.shape[1]:
            raise StabilityError("The family must consist of submodules of a_n.")
    for n in range(1, len(c)):
        transition = system.transition(n - 1, n)
        checks = (
            ("r_a", transition.r_a, c[n - 1], c[n]),
            ("k_a", transition.k_a, c[n], c[n - 1]),
        )
        for name, f, source, target in checks:
            lifts = source.inclusion_matrix()
            for j in range(lifts.shape[1]):
                image = f(lifts[:, j])
                if not target.contains(image):
                    raise StabilityError(
                        f"{name} between levels {n - 1} and {n} sends generator "
                        f"{j} of the family to {list(image)}, outside the family."
                    )


class DerivedPair(NamedTuple):
    c: GammaSystem
    e: GammaSystem


def derived_pair(system: GammaSystem, c: Sequence[Subquotient]) -> DerivedPair:
    """
    The systems C = (c_n, b_n/f_n) and E = (a_n/c_n, f_n) of a stable family.

    f_n is the annihilator of c_n under the level pairing.
    """
    if len(c) != len(system.levels):
        raise StabilityError("The family needs one submodule per level.")
    _check_stable(system, c)

    c_side, d_side, e_side, f_side = [], [], [], []
    for level, part in zip(system.levels, c):
        c_gens = part.inclusion_matrix()
        f_gens = level.pairing.annihilator(part, "left").inclusion_matrix()
        c_side.append(Subquotient(level.a, c_gens))
        d_side.append(Subquotient(level.b, identity(level.b.rank), f_gens))
        e_side.append(Subquotient(level.a, identity(level.a.rank), c_gens))
        f_side.append(Subquotient(level.b, f_gens))
    return DerivedPair(
        restrict_system(system, c_side, d_side),
        restrict_system(system, e_side, f_side),
    )


def derived_prime(system: GammaSystem) -> GammaSystem:
    """
    A' = image of a^1 x b^1 in (a/a^0) x (b/b^0).

    a^1 and b^1 are the annihilators of b^0 and a^0; the result is strongly
    controlled.
    """
    kernels = kernel_system(system)
    a_parts, b_parts = [], []
    for level, kernel in zip(system.levels, kernels):
        a_one = level.pairing.annihilator(kernel.b, "right").inclusion_matrix()
        b_one = level.pairing.annihilator(kernel.a, "left").inclusion_matrix()
        a_parts.append(Subquotient(level.a, a_one, kernel.a.inclusion_matrix()))
        b_parts.append(Subquotient(level.b, b_one, kernel.b.inclusion_matrix()))
        logger.debug(
            "Level %s: |a'| = %s, |a0| = %s",
            level.level,
            a_parts[-1].order,
            kernel.a.order,
        )
    return restrict_system(system, a_parts, b_parts)


@dataclass(frozen=True)
class ControlVerdict:
    """Strong control judged through r (injective) and through k (surjective)."""

    by_restriction: bool
    by_corestriction: bool
    witness: str | None = None

    @property
    def holds(self) -> bool:
        return self.by_restriction and self.by_corestriction

    @property
    def consistent(self) -> bool:
        return self.by_restriction == self.by_corestriction

    def __bool__(self) -> bool:
        return self.holds


def _kernel_witness(name: str, m: int, n: int, f: ModuleMap) -> str | None:
    kernel = f.kernel()
    if kernel.order == 1:
        return None
    element = kernel.inclusion_matrix()[:, 0]
    return f"{name}_{m}^{n} kills {list(element)} (kernel of order {kernel.order})"


def is_strongly_controlled(system: GammaSystem) -> ControlVerdict:
    injective, surjective = True, True
    witness = None
    for m, n in system.pairs():
        transition = system.transition(m, n)
        for name in ("r_a", "r_b"):
            f = transition.get(name)  # type: ignore[arg-type]
            found = _kernel_witness(name, m, n, f)
            if found is not None:
                injective = False
                witness = witness or found
        for name in ("k_a", "k_b"):
            f = transition.get(name)  # type: ignore[arg-type]
            if not f.is_surjective():
                surjective = False
                witness = witness or (
                    f"{name}_{m}^{n} has image of order {f.image().order} "
                    f"in a group of order {f.target.order}"
                )
    verdict = ControlVerdict(injective, surjective, witness)
    if not verdict.consistent:
        logger.warning("Restriction and corestriction disagree on strong control")
    return verdict


@dataclass(frozen=True)
class TransferCheck:
    applicable: bool
    kills_b: bool
    kills_a: bool

    @property
    def holds(self) -> bool | None:
        """None when the system is not strongly controlled."""
        if not self.applicable:
            return None
        return self.kills_a or not self.kills_b


def _kills(xi: AlgebraElement, system: GammaSystem, side: str) -> bool:
    for level in system.levels:
        module = level.a if side == "a" else level.b
        if any(action_matrix(xi, module).flatten()):
            return False
    return True


def annihilator_transfer_check(
    system: GammaSystem, xi: AlgebraElement
) -> TransferCheck:
    """Whether xi b_n = 0 for every n forces sharp(xi) a_n = 0 for every n."""
    return TransferCheck(
        is_strongly_controlled(system).holds,
        _kills(xi, system, "b"),
        _kills(sharp(xi), system, "a"),
    )
