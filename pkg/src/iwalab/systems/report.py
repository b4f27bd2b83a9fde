from __future__ import annotations

import logging

from dataclasses import dataclass
from functools import partial
from typing import Callable
from typing import Iterator

import numpy as np

from iwalab.algebra.operations import norm_element
from iwalab.modules.module import FiniteModule
from iwalab.modules.module import ModuleMap
from iwalab.modules.module import first_nonzero_column
from iwalab.modules.module import matrix_power
from iwalab.modules.operations import action_matrix
from iwalab.modules.pairing import PairingMatrix
from iwalab.modules.smith import identity
from iwalab.systems.system import GammaSystem
from iwalab.systems.system import Side
from iwalab.utils import parallel_map


logger = logging.getLogger(__name__)

AXIOMS = ("Γ-1", "Γ-2", "Γ-3", "Γ-4")
SIDES: tuple[Side, ...] = ("a", "b")


@dataclass(frozen=True)
class CheckResult:
    axiom: str
    name: str
    location: str
    passed: bool
    witness: str | None = None

    @classmethod
    def judge(
        cls, axiom: str, name: str, location: str, witness: str | None
    ) -> CheckResult:
        return cls(axiom, name, location, witness is None, witness)


@dataclass(frozen=True)
class LevelSummary:
    level: int
    a_order: int
    b_order: int
    a_divisors: tuple[int, ...]
    b_divisors: tuple[int, ...]


@dataclass(frozen=True)
class SystemReport:
    checks: tuple[CheckResult, ...]
    levels: tuple[LevelSummary, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> list[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def by_axiom(self, axiom: str) -> list[CheckResult]:
        return [check for check in self.checks if check.axiom == axiom]

    def axiom_passed(self, axiom: str) -> bool:
        return all(check.passed for check in self.by_axiom(axiom))

    def __iter__(self) -> Iterator[CheckResult]:
        return iter(self.checks)


def _map_difference(f: ModuleMap, matrix: object, label: str) -> str | None:
    column = first_nonzero_column(
        f.matrix - np.array(matrix, dtype=object), f.target.divisors
    )
    if column is None:
        return None
    return f"{label} differs on generator {column}"


def _action_check(module: FiniteModule, label: str) -> str | None:
    order = module.p**module.level
    for i, action in enumerate(module.actions):
        power = matrix_power(action, order, module.divisors)
        if not module.congruent(power, identity(module.rank)):
            return f"g{i + 1}^{order} is not the identity on {label}"
    return None


def _gamma_1(system: GammaSystem, n: int) -> list[CheckResult]:
    level = system.level(n)
    return [
        CheckResult.judge(
            "Γ-1",
            f"action on {side}",
            f"n={n}",
            _action_check(level.module(side), f"{side}_{n}"),
        )
        for side in SIDES
    ]


def _gamma_2(system: GammaSystem, m: int, n: int) -> list[CheckResult]:
    location = f"m={m},n={n}"
    transition = system.transition(m, n)
    results = []
    for name in ("r_a", "r_b", "k_a", "k_b"):
        witness = transition.get(name).equivariance_witness()  # type: ignore[arg-type]
        if witness is not None:
            witness = f"{name} is not equivariant: {witness}"
        results.append(
            CheckResult.judge("Γ-2", f"{name} equivariant", location, witness)
        )

    if (m, n) in system.explicit_pairs() and n - m > 1:
        chained = system.chained(m, n)
        for name in ("r_a", "r_b", "k_a", "k_b"):
            witness = _map_difference(
                transition.get(name),  # type: ignore[arg-type]
                chained.get(name).matrix,  # type: ignore[arg-type]
                f"{name} against the composite of consecutive maps",
            )
            results.append(
                CheckResult.judge("Γ-2", f"{name} transitive", location, witness)
            )
    return results


def _gamma_2_identity(system: GammaSystem, n: int) -> list[CheckResult]:
    if (n, n) not in system.explicit_pairs():
        return []
    transition = system.transition(n, n)
    results = []
    for name in ("r_a", "r_b", "k_a", "k_b"):
        f = transition.get(name)  # type: ignore[arg-type]
        witness = _map_difference(f, identity(f.source.rank), f"{name}_{n}^{n}")
        results.append(
            CheckResult.judge("Γ-2", f"{name} identity", f"n={n}", witness)
        )
    return results


def _gamma_3(system: GammaSystem, m: int, n: int) -> list[CheckResult]:
    location = f"m={m},n={n}"
    transition = system.transition(m, n)
    norm = norm_element(system.p, system.d, n, m)
    scalar = system.p ** (system.d * (n - m))
    results = []
    for side in SIDES:
        r, k = transition.r(side), transition.k(side)
        top = system.level(n).module(side)
        witness = _map_difference(
            r.compose(k),
            action_matrix(norm, top),
            f"r∘k on {side}_{n} against the norm",
        )
        results.append(
            CheckResult.judge("Γ-3", f"r∘k = norm on {side}", location, witness)
        )

        bottom = system.level(m).module(side)
        witness = _map_difference(
            k.compose(r),
            bottom.scalar_matrix(scalar),
            f"k∘r on {side}_{m} against {scalar}",
        )
        results.append(
            CheckResult.judge("Γ-3", f"k∘r = p^d(n-m) on {side}", location, witness)
        )
    return results


def _gamma_4_level(system: GammaSystem, n: int) -> list[CheckResult]:
    pairing = system.level(n).pairing
    perfect = None if pairing.is_perfect() else f"pairing_{n} is degenerate"
    invariant = pairing.invariance_witness()
    if invariant is not None:
        invariant = f"pairing_{n} is not invariant under {invariant}"
    return [
        CheckResult.judge("Γ-4", "perfect", f"n={n}", perfect),
        CheckResult.judge("Γ-4", "invariant", f"n={n}", invariant),
    ]


def _adjoint_witness(
    upper: PairingMatrix,
    lower: PairingMatrix,
    up: ModuleMap,
    down: ModuleMap,
    upper_on_left: bool,
) -> str | None:
    """
    Compare <x, up(y)>_upper with <down(x), y>_lower on generators.

    With ``upper_on_left`` false the roles of the two sides are swapped:
    <up(x), y>_upper against <x, down(y)>_lower.
    """
    if upper_on_left:
        for i, x in enumerate(upper.left.basis()):
            for j, y in enumerate(lower.right.basis()):
                if upper.pair(x, up(y)) != lower.pair(down(x), y):
                    return f"generators ({i}, {j})"
    else:
        for i, x in enumerate(lower.left.basis()):
            for j, y in enumerate(upper.right.basis()):
                if upper.pair(up(x), y) != lower.pair(x, down(y)):
                    return f"generators ({i}, {j})"
    return None


def _gamma_4_pair(system: GammaSystem, m: int, n: int) -> list[CheckResult]:
    location = f"m={m},n={n}"
    transition = system.transition(m, n)
    upper, lower = system.level(n).pairing, system.level(m).pairing

    first = _adjoint_witness(upper, lower, transition.r_b, transition.k_a, True)
    if first is not None:
        first = f"<a, r(b)>_{n} != <k(a), b>_{m} on {first}"
    second = _adjoint_witness(upper, lower, transition.r_a, transition.k_b, False)
    if second is not None:
        second = f"<r(a), b>_{n} != <a, k(b)>_{m} on {second}"
    return [
        CheckResult.judge("Γ-4", "<a, r(b)> = <k(a), b>", location, first),
        CheckResult.judge("Γ-4", "<r(a), b> = <a, k(b)>", location, second),
    ]


def _summaries(system: GammaSystem) -> tuple[LevelSummary, ...]:
    return tuple(
        LevelSummary(
            level.level,
            level.a.order,
            level.b.order,
            level.a.divisors,
            level.b.divisors,
        )
        for level in system.levels
    )


def validate(system: GammaSystem, jobs: int = 1) -> SystemReport:
    """
    Check the four Gamma-system axioms at every level and level pair.

    Violations are report entries carrying a witness, never exceptions.
    """
    tasks: list[Callable[[], list[CheckResult]]] = []
    for n in range(system.max_level + 1):
        tasks.append(partial(_gamma_1, system, n))
        tasks.append(partial(_gamma_2_identity, system, n))
        tasks.append(partial(_gamma_4_level, system, n))
    for m, n in system.pairs():
        tasks.append(partial(_gamma_2, system, m, n))
        tasks.append(partial(_gamma_3, system, m, n))
        tasks.append(partial(_gamma_4_pair, system, m, n))

    results = parallel_map(lambda task: task(), tasks, jobs)
    checks = sorted(
        (check for batch in results for check in batch),
        key=lambda check: AXIOMS.index(check.axiom),
    )
    report = SystemReport(tuple(checks), _summaries(system))
    logger.info(
        "Validated %s checks over %s levels, %s failed",
        len(checks),
        system.max_level + 1,
        len(report.failures()),
    )
    return report


def check_matrix(
    axiom: str, name: str, location: str, f: ModuleMap, expected: object
) -> CheckResult:
    """Compare a map against an expected matrix, as a report entry."""
    return CheckResult.judge(axiom, name, location, _map_difference(f, expected, name))

