from __future__ import annotations

import logging

from dataclasses import dataclass
from typing import Literal

from iwalab.algebra.element import AlgebraElement
from iwalab.algebra.operations import multiply
from iwalab.algebra.operations import norm_identity_holds
from iwalab.algebra.types import GammaSpec
from iwalab.algebra.types import GroupVector
from iwalab.algebra.types import PrimeConfig
from iwalab.flats.zeros import DEFAULT_BUDGET
from iwalab.flats.zeros import has_character_zero
from iwalab.ideals.elementary import ElementaryModule
from iwalab.modules.module import ModuleMap
from iwalab.modules.module import Presentation
from iwalab.modules.module import from_presentation
from iwalab.modules.operations import dual_matrix
from iwalab.modules.pairing import PairingMatrix
from iwalab.modules.smith import IntMatrix
from iwalab.modules.smith import matmul
from iwalab.modules.smith import zeros
from iwalab.systems.exceptions import CharacterZeroError
from iwalab.systems.exceptions import GammaSystemError
from iwalab.systems.system import GammaSystem
from iwalab.systems.system import SystemLevel
from iwalab.systems.system import Transition


logger = logging.getLogger(__name__)

Mode = Literal["full", "torsion"]


@dataclass(frozen=True)
class _LevelBasis:
    """Integer coordinates of the free module (Z[Gamma_n])^factors."""

    p: int
    d: int
    level: int
    factors: int

    @property
    def size(self) -> int:
        return int(self.p ** (self.d * self.level))

    @property
    def rank(self) -> int:
        return self.factors * self.size

    def elements(self) -> list[GroupVector]:
        return list(GroupVector.all_elements(self.p, self.d, self.level))

    def index(self, factor: int, exponents: tuple[int, ...]) -> int:
        modulus = self.p**self.level
        position = 0
        for e in exponents:
            position = position * modulus + e % modulus
        return factor * self.size + position


def _relations(basis: _LevelBasis, relators: list[AlgebraElement]) -> IntMatrix:
    rows = zeros(basis.rank, basis.rank)
    for f, eta in enumerate(relators):
        reduced = eta.reduce_level(basis.p, basis.level)
        for gamma in basis.elements():
            row = basis.index(f, gamma.exponents)
            for exponents, coefficient in reduced.terms:
                shifted = tuple(a + b for a, b in zip(exponents, gamma.exponents))
                column = basis.index(f, shifted)
                value = int(coefficient)  # type: ignore[call-overload]
                rows[row, column] = rows[row, column] + value
    return rows


def _shift_actions(basis: _LevelBasis) -> list[IntMatrix]:
    actions = []
    for i in range(basis.d):
        matrix = zeros(basis.rank, basis.rank)
        for f in range(basis.factors):
            for gamma in basis.elements():
                shifted = list(gamma.exponents)
                shifted[i] += 1
                row = basis.index(f, tuple(shifted))
                matrix[row, basis.index(f, gamma.exponents)] = 1
        actions.append(matrix)
    return actions


def _projection(upper: _LevelBasis, lower: _LevelBasis) -> IntMatrix:
    """Reduction of exponents from level n to level m."""
    matrix = zeros(lower.rank, upper.rank)
    for f in range(upper.factors):
        for gamma in upper.elements():
            matrix[lower.index(f, gamma.exponents), upper.index(f, gamma.exponents)] = 1
    return matrix


def _norm_lift(lower: _LevelBasis, upper: _LevelBasis) -> IntMatrix:
    """Lift from level m to level n followed by the norm of Gamma_n -> Gamma_m."""
    matrix = zeros(upper.rank, lower.rank)
    step = lower.p**lower.level
    kernel = list(GroupVector.all_elements(lower.p, lower.d, upper.level - lower.level))
    for f in range(lower.factors):
        for gamma in lower.elements():
            column = lower.index(f, gamma.exponents)
            for sigma in kernel:
                exponents = tuple(
                    g + step * s for g, s in zip(gamma.exponents, sigma.exponents)
                )
                matrix[upper.index(f, exponents), column] += 1
    return matrix


def _adjoint(f: ModuleMap) -> IntMatrix:
    return dual_matrix(f.matrix, f.source.divisors, f.target.divisors)


def _check_admissible(
    module: ElementaryModule, prime: PrimeConfig, max_level: int, budget: int
) -> None:
    for index, (xi, _) in enumerate(module.factors):
        omega = has_character_zero(xi, prime.p, max_level, budget)
        if omega is not None:
            raise CharacterZeroError(
                f"Character {omega} of level {max_level} kills factor {index} "
                f"({xi}); the quotient has a free part, use mode torsion."
            )


def from_torsion_module(
    module: ElementaryModule,
    prime: PrimeConfig,
    gamma: GammaSpec,
    max_level: int,
    mode: Mode = "full",
    budget: int = DEFAULT_BUDGET,
) -> GammaSystem:
    """
    The Gamma-system of finite quotients of M = sum of Lambda/(xi_i^r_i).

    b_n is M/I_n M (its p-power torsion in mode torsion), k reduces
    exponents, r multiplies by the norm element. The a-side is the dual of
    the b-side with the contragredient action, paired by evaluation, and its
    maps are the transposes of the b-side maps.
    """
    if module.d is not None and module.d != gamma.d:
        raise GammaSystemError(
            f"The module lives over rank {module.d}, the header says {gamma.d}."
        )
    if any(xi.ring.kind != "integer" for xi, _ in module.factors):
        raise GammaSystemError("Synthetic systems need integer coefficients.")
    if mode not in ("full", "torsion"):
        raise GammaSystemError(f"Unknown mode {mode!r}.")
    if mode == "full":
        _check_admissible(module, prime, max_level, budget)

    p, d = prime.p, gamma.d
    relators = module.powers()
    bases = [_LevelBasis(p, d, n, len(relators)) for n in range(max_level + 1)]
    presentations: list[Presentation] = []
    levels: list[SystemLevel] = []
    for basis in bases:
        presentation = from_presentation(
            p,
            basis.level,
            _relations(basis, relators),
            _shift_actions(basis),
            torsion=mode == "torsion",
        )
        b = presentation.module
        pairing = PairingMatrix.evaluation(b).transpose()
        presentations.append(presentation)
        levels.append(SystemLevel(basis.level, pairing.left, b, pairing))
        logger.debug("Level %s: b = %s", basis.level, b.describe())

    transitions = []
    for n in range(1, max_level + 1):
        if not norm_identity_holds(p, d, n, n - 1):
            raise GammaSystemError(
                f"The norm from level {n} does not preserve I_{n - 1}."
            )
        low, high = presentations[n - 1], presentations[n]
        k_b = ModuleMap(
            high.module,
            low.module,
            matmul(matmul(low.coords, _projection(bases[n], bases[n - 1])), high.basis),
        )
        r_b = ModuleMap(
            low.module,
            high.module,
            matmul(matmul(high.coords, _norm_lift(bases[n - 1], bases[n])), low.basis),
        )
        a_low, a_high = levels[n - 1].a, levels[n].a
        r_a = ModuleMap(a_low, a_high, _adjoint(k_b))
        k_a = ModuleMap(a_high, a_low, _adjoint(r_b))
        transitions.append(Transition(n - 1, n, r_a, r_b, k_a, k_b))

    return GammaSystem(prime, gamma, tuple(levels), tuple(transitions))


def synthetic_relator(module: ElementaryModule, d: int) -> AlgebraElement:
    """The product of the relations, an annihilator of M."""
    result = AlgebraElement.one(d)
    for eta in module.powers():
        result = multiply(result, eta)
    return result
