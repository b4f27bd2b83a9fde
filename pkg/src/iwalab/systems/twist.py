from __future__ import annotations

import logging

from iwalab.algebra.characters import UnitCharacter
from iwalab.algebra.types import valuation
from iwalab.modules.module import FiniteModule
from iwalab.modules.module import ModuleMap
from iwalab.modules.pairing import PairingMatrix
from iwalab.systems.exceptions import TwistConditionError
from iwalab.systems.system import GammaSystem
from iwalab.systems.system import SystemLevel
from iwalab.systems.system import Transition


logger = logging.getLogger(__name__)


def twistable_order(system: GammaSystem) -> int:
    """Smallest k >= 0 with p^(n+k) a_n = 0 at every level."""
    orders = [
        valuation(system.p, level.a.exponent) - level.level for level in system.levels
    ]
    return max([0, *orders])


def _twisted(module: FiniteModule, phi: UnitCharacter, inverse: bool) -> FiniteModule:
    """gamma_i acts through phi(gamma_i) A_i, or phi(gamma_i)^-1 A_i."""
    values = phi.inverse().values if inverse else phi.values
    actions = [
        module.reduce_matrix(action * value)
        for action, value in zip(module.actions, values)
    ]
    return module.with_actions(actions)


def _check_condition(system: GammaSystem, phi: UnitCharacter) -> None:
    if phi.d != system.d or phi.p != system.p:
        raise TwistConditionError(
            f"phi is a character of Z_{phi.p}^{phi.d}, the system lives over "
            f"Z_{system.p}^{system.d}."
        )
    k = twistable_order(system)
    if phi.congruence_level() < k:
        raise TwistConditionError(
            f"The system is twistable of order {k} only: phi(Gamma) must lie in "
            f"1 + {system.p}^{k} Z_{system.p}, phi({phi}) is only congruent to 1 "
            f"modulo {system.p}^{phi.congruence_level()}."
        )
    for level in system.levels:
        for module in (level.a, level.b):
            if phi.modulus % module.exponent:
                raise TwistConditionError(
                    f"Level {level.level} has exponent {module.exponent}, beyond the "
                    f"precision {system.p}^{phi.precision} of phi; raise --precision."
                )


def twist_system(system: GammaSystem, phi: UnitCharacter) -> GammaSystem:
    """
    A(phi) = (a_n(phi^-1), b_n(phi)).

    Pairing values and the matrices of r and k are unchanged; only the
    actions are twisted.
    """
    _check_condition(system, phi)

    levels = []
    for level in system.levels:
        a = _twisted(level.a, phi, inverse=True)
        b = _twisted(level.b, phi, inverse=False)
        levels.append(
            SystemLevel(level.level, a, b, PairingMatrix(a, b, level.pairing.values))
        )

    def carry(f: ModuleMap, source: FiniteModule, target: FiniteModule) -> ModuleMap:
        return ModuleMap(source, target, f.matrix, f.equivariant)

    transitions = []
    for t in system.transitions:
        low, high = levels[t.m], levels[t.n]
        transitions.append(
            Transition(
                t.m,
                t.n,
                carry(t.r_a, low.a, high.a),
                carry(t.r_b, low.b, high.b),
                carry(t.k_a, high.a, low.a),
                carry(t.k_b, high.b, low.b),
            )
        )
    logger.debug("Twisted %s levels by phi = (%s)", len(levels), phi)
    return GammaSystem(system.prime, system.gamma, tuple(levels), tuple(transitions))
