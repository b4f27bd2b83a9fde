from __future__ import annotations

import logging

from dataclasses import dataclass

from iwalab.algebra.element import AlgebraElement
from iwalab.algebra.operations import sharp
from iwalab.modules.module import ModuleMap
from iwalab.modules.module import Subquotient
from iwalab.modules.operations import action_matrix
from iwalab.modules.operations import multiplication_map
from iwalab.modules.pairing import PairingMatrix
from iwalab.modules.pairing import rational_matrix
from iwalab.modules.smith import from_columns
from iwalab.modules.smith import identity
from iwalab.systems.derived import restrict_system
from iwalab.systems.exceptions import GammaSystemError
from iwalab.systems.report import CheckResult
from iwalab.systems.report import SystemReport
from iwalab.systems.report import check_matrix
from iwalab.systems.system import GammaSystem
from iwalab.systems.system import SystemLevel


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SystemMorphism:
    """
    A morphism A -> C: f_n: a_n -> c_n and, contravariantly, g_n: d_n -> b_n.
    """

    source: GammaSystem
    target: GammaSystem
    f: tuple[ModuleMap, ...]
    g: tuple[ModuleMap, ...]

    def __post_init__(self) -> None:
        count = len(self.source.levels)
        if len(self.target.levels) != count:
            raise GammaSystemError("A morphism joins systems with the same levels.")
        if len(self.f) != count or len(self.g) != count:
            raise GammaSystemError("A morphism needs one map per level and side.")
        for n, (f, g) in enumerate(zip(self.f, self.g)):
            source, target = self.source.level(n), self.target.level(n)
            if not (f.source.same_as(source.a) and f.target.same_as(target.a)):
                raise GammaSystemError(f"f_{n} does not go from a_{n} to c_{n}.")
            if not (g.source.same_as(target.b) and g.target.same_as(source.b)):
                raise GammaSystemError(f"g_{n} does not go from d_{n} to b_{n}.")


def _adjoint_check(
    morphism: SystemMorphism, n: int, source: SystemLevel, target: SystemLevel
) -> CheckResult:
    f, g = morphism.f[n], morphism.g[n]
    witness = None
    for i, x in enumerate(source.a.basis()):
        for j, y in enumerate(target.b.basis()):
            if target.pairing.pair(f(x), y) != source.pairing.pair(x, g(y)):
                witness = f"<f(a), d> != <a, g(d)> on generators ({i}, {j})"
                break
        if witness:
            break
    return CheckResult.judge("morphism", "adjoint", f"n={n}", witness)


def verify_morphism(morphism: SystemMorphism) -> SystemReport:
    """Equivariance, adjointness and compatibility with r and k."""
    checks = []
    for n in range(len(morphism.f)):
        source, target = morphism.source.level(n), morphism.target.level(n)
        for name, f in (("f", morphism.f[n]), ("g", morphism.g[n])):
            witness = f.equivariance_witness()
            checks.append(
                CheckResult.judge("morphism", f"{name} equivariant", f"n={n}", witness)
            )
        checks.append(_adjoint_check(morphism, n, source, target))

    for n in range(1, len(morphism.f)):
        m, location = n - 1, f"m={n - 1},n={n}"
        a, c = morphism.source.transition(m, n), morphism.target.transition(m, n)
        f_m, f_n = morphism.f[m], morphism.f[n]
        g_m, g_n = morphism.g[m], morphism.g[n]
        pairs = (
            ("f after r", f_n.compose(a.r_a), c.r_a.compose(f_m)),
            ("f after k", f_m.compose(a.k_a), c.k_a.compose(f_n)),
            ("g after r", g_n.compose(c.r_b), a.r_b.compose(g_m)),
            ("g after k", g_m.compose(c.k_b), a.k_b.compose(g_n)),
        )
        for name, left, right in pairs:
            checks.append(check_matrix("morphism", name, location, left, right.matrix))
    return SystemReport(tuple(checks), ())


def _scalar_pairing(
    level: SystemLevel, a_part: Subquotient, b_part: Subquotient
) -> PairingMatrix:
    """<lam x, v> := <x, v>, x read off the image coordinates."""
    preimages = a_part.numerator_coordinates()
    lifts = b_part.inclusion_matrix()
    values = rational_matrix(a_part.module.rank, b_part.module.rank)
    for i in range(a_part.module.rank):
        for j in range(b_part.module.rank):
            values[i, j] = level.pairing.pair(preimages[:, i], lifts[:, j])
    return PairingMatrix(a_part.module, b_part.module, values)


def _scalar_parts(
    system: GammaSystem, lam: AlgebraElement
) -> tuple[list[Subquotient], list[Subquotient]]:
    a_parts, b_parts = [], []
    for level in system.levels:
        a_parts.append(Subquotient(level.a, action_matrix(lam, level.a)))
        b_parts.append(Subquotient(level.b, action_matrix(sharp(lam), level.b)))
    return a_parts, b_parts


def _restrict_scalar(
    system: GammaSystem, a_parts: list[Subquotient], b_parts: list[Subquotient]
) -> GammaSystem:
    pairings = [
        _scalar_pairing(level, a, b)
        for level, a, b in zip(system.levels, a_parts, b_parts)
    ]
    return restrict_system(system, a_parts, b_parts, pairings)


def scalar_system(system: GammaSystem, lam: AlgebraElement) -> GammaSystem:
    """lam A = (lam a_n, sharp(lam) b_n)."""
    return _restrict_scalar(system, *_scalar_parts(system, lam))


def _torsion_parts(
    system: GammaSystem, lam: AlgebraElement
) -> tuple[list[Subquotient], list[Subquotient]]:
    a_parts, b_parts = [], []
    for level in system.levels:
        a_parts.append(multiplication_map(lam, level.a).kernel())
        b_parts.append(
            Subquotient(
                level.b, identity(level.b.rank), action_matrix(sharp(lam), level.b)
            )
        )
    return a_parts, b_parts


def torsion_system(system: GammaSystem, lam: AlgebraElement) -> GammaSystem:
    """A[lam] = (a_n[lam], b_n / sharp(lam) b_n)."""
    a_parts, b_parts = _torsion_parts(system, lam)
    return restrict_system(system, a_parts, b_parts)


def torsion_morphism(system: GammaSystem, lam: AlgebraElement) -> SystemMorphism:
    """A[lam] -> A: inclusion of a_n[lam], projection of b_n onto its quotient."""
    a_parts, b_parts = _torsion_parts(system, lam)
    torsion = restrict_system(system, a_parts, b_parts)
    f = tuple(part.inclusion() for part in a_parts)
    g = tuple(part.projection() for part in b_parts)
    return SystemMorphism(torsion, system, f, g)


def _multiplication_onto(part: Subquotient, lam: AlgebraElement) -> ModuleMap:
    ambient = part.ambient
    matrix = action_matrix(lam, ambient)
    columns = []
    for j in range(ambient.rank):
        image = part.project(matrix[:, j])
        if image is None:
            raise GammaSystemError("lam a_n does not contain lam times a generator.")
        columns.append(image)
    matrix = from_columns(columns, part.module.rank)
    return ModuleMap(ambient, part.module, matrix, True)


def scalar_morphism(system: GammaSystem, lam: AlgebraElement) -> SystemMorphism:
    """A -> lam A: multiplication by lam on a_n, inclusion of sharp(lam) b_n."""
    a_parts, b_parts = _scalar_parts(system, lam)
    target = _restrict_scalar(system, a_parts, b_parts)
    f = tuple(_multiplication_onto(part, lam) for part in a_parts)
    g = tuple(part.inclusion() for part in b_parts)
    logger.debug("Canonical morphism onto %s A over %s levels", lam, len(f))
    return SystemMorphism(system, target, f, g)
