from __future__ import annotations

import logging

from dataclasses import dataclass
from dataclasses import field
from dataclasses import replace
from typing import Iterator
from typing import Literal
from typing import Sequence

from iwalab.algebra.types import GammaSpec
from iwalab.algebra.types import PrimeConfig
from iwalab.modules.module import FiniteModule
from iwalab.modules.module import ModuleMap
from iwalab.modules.pairing import PairingMatrix
from iwalab.systems.exceptions import GammaSystemError


logger = logging.getLogger(__name__)

Side = Literal["a", "b"]
MapName = Literal["r_a", "r_b", "k_a", "k_b"]
MAP_NAMES: tuple[MapName, ...] = ("r_a", "r_b", "k_a", "k_b")


@dataclass(frozen=True)
class SystemLevel:
    level: int
    a: FiniteModule
    b: FiniteModule
    pairing: PairingMatrix

    def module(self, side: Side) -> FiniteModule:
        return self.a if side == "a" else self.b


@dataclass(frozen=True)
class Transition:
    """
    The structure maps between levels m <= n.

    r goes up (level m to level n), k comes down (level n to level m).
    """

    m: int
    n: int
    r_a: ModuleMap
    r_b: ModuleMap
    k_a: ModuleMap
    k_b: ModuleMap

    @classmethod
    def identity(cls, level: SystemLevel) -> Transition:
        a, b = ModuleMap.identity(level.a), ModuleMap.identity(level.b)
        return cls(level.level, level.level, a, b, a, b)

    def get(self, name: MapName) -> ModuleMap:
        return getattr(self, name)  # type: ignore[no-any-return]

    def r(self, side: Side) -> ModuleMap:
        return self.r_a if side == "a" else self.r_b

    def k(self, side: Side) -> ModuleMap:
        return self.k_a if side == "a" else self.k_b

    def then(self, later: Transition) -> Transition:
        """Chain (m, l) with (l, n) into (m, n)."""
        if later.m != self.n:
            raise GammaSystemError(
                f"Cannot chain transition {self.m}->{self.n} with {later.m}->{later.n}."
            )
        return Transition(
            self.m,
            later.n,
            later.r_a.compose(self.r_a),
            later.r_b.compose(self.r_b),
            self.k_a.compose(later.k_a),
            self.k_b.compose(later.k_b),
        )


@dataclass(frozen=True, eq=False)
class GammaSystem:
    """
    Levels 0..N of a Gamma-system with their pairings and structure maps.

    Consecutive transitions (n - 1, n) are required; other pairs may be given
    explicitly (and are then checked for transitivity by the validator) or
    are obtained by composition.
    """

    prime: PrimeConfig
    gamma: GammaSpec
    levels: tuple[SystemLevel, ...]
    transitions: tuple[Transition, ...] = ()
    _index: dict[tuple[int, int], Transition] = field(
        default_factory=dict, init=False, repr=False
    )

    def __post_init__(self) -> None:
        if not self.levels:
            raise GammaSystemError("A system needs at least level 0.")
        for n, level in enumerate(self.levels):
            if level.level != n:
                raise GammaSystemError(f"Level {level.level} found at position {n}.")
            for side in ("a", "b"):
                module = level.module(side)  # type: ignore[arg-type]
                if (module.p, module.level, module.d) != (self.p, n, self.d):
                    raise GammaSystemError(
                        f"Module {side}_{n} is not a module over Gamma_{n} for "
                        f"p={self.p}, d={self.d}."
                    )
            pairing = level.pairing
            if not (pairing.left.same_as(level.a) and pairing.right.same_as(level.b)):
                raise GammaSystemError(
                    f"Pairing at level {n} is not on (a_{n}, b_{n})."
                )

        for transition in self.transitions:
            self._check_transition(transition)
            key = (transition.m, transition.n)
            if key in self._index:
                raise GammaSystemError(f"Transition {key} is given twice.")
            self._index[key] = transition
        for n in range(1, len(self.levels)):
            if (n - 1, n) not in self._index:
                raise GammaSystemError(
                    f"Missing transition maps from level {n - 1} to {n}."
                )

    def _check_transition(self, t: Transition) -> None:
        if not 0 <= t.m <= t.n <= self.max_level:
            raise GammaSystemError(
                f"Transition {t.m}->{t.n} is outside levels 0..{self.max_level}."
            )
        low, high = self.levels[t.m], self.levels[t.n]
        expected = {
            "r_a": (low.a, high.a),
            "r_b": (low.b, high.b),
            "k_a": (high.a, low.a),
            "k_b": (high.b, low.b),
        }
        for name, (source, target) in expected.items():
            f = t.get(name)  # type: ignore[arg-type]
            if not (f.source.same_as(source) and f.target.same_as(target)):
                raise GammaSystemError(
                    f"Map {name} of transition {t.m}->{t.n} has the wrong modules."
                )

    @property
    def p(self) -> int:
        return self.prime.p

    @property
    def d(self) -> int:
        return self.gamma.d

    @property
    def max_level(self) -> int:
        return len(self.levels) - 1

    def level(self, n: int) -> SystemLevel:
        return self.levels[n]

    def explicit_pairs(self) -> list[tuple[int, int]]:
        return sorted(self._index)

    def pairs(self) -> Iterator[tuple[int, int]]:
        """All (m, n) with m < n."""
        for n in range(1, len(self.levels)):
            for m in range(n):
                yield m, n

    def transition(self, m: int, n: int) -> Transition:
        if (m, n) in self._index:
            return self._index[(m, n)]
        if m == n:
            return Transition.identity(self.levels[n])
        if not 0 <= m < n <= self.max_level:
            raise GammaSystemError(f"No transition from level {m} to level {n}.")
        result = self.transition(m, m + 1)
        for step in range(m + 1, n):
            result = result.then(self.transition(step, step + 1))
        return result

    def chained(self, m: int, n: int) -> Transition:
        """The composite of consecutive transitions, ignoring explicit (m, n) data."""
        result = Transition.identity(self.levels[m])
        for step in range(m, n):
            result = result.then(self.transition(step, step + 1))
        return result

    def orders(self) -> list[tuple[int, int]]:
        return [(level.a.order, level.b.order) for level in self.levels]

    def with_transitions(self, transitions: Sequence[Transition]) -> GammaSystem:
        return GammaSystem(self.prime, self.gamma, self.levels, tuple(transitions))

    def truncate(self, max_level: int) -> GammaSystem:
        transitions = [t for t in self.transitions if t.n <= max_level]
        levels = self.levels[: max_level + 1]
        return GammaSystem(self.prime, self.gamma, levels, tuple(transitions))


def trivial_system(
    prime: PrimeConfig, gamma: GammaSpec, max_level: int
) -> GammaSystem:
    levels = []
    for n in range(max_level + 1):
        zero = FiniteModule.zero(prime.p, n, gamma.d)
        levels.append(SystemLevel(n, zero, zero, PairingMatrix.zero(zero, zero)))
    transitions = []
    for n in range(1, max_level + 1):
        low, high = levels[n - 1].a, levels[n].a
        transitions.append(
            Transition(
                n - 1,
                n,
                ModuleMap.zero(low, high),
                ModuleMap.zero(low, high),
                ModuleMap.zero(high, low),
                ModuleMap.zero(high, low),
            )
        )
    return GammaSystem(prime, gamma, tuple(levels), tuple(transitions))


def mutate(
    system: GammaSystem,
    m: int,
    n: int,
    name: MapName,
    row: int = 0,
    column: int = 0,
) -> GammaSystem:
    """
    Corrupt one matrix entry of an explicit transition map.

    The entry moves by the smallest step that keeps the map well defined, so
    the result is still a structurally valid system.
    """
    transitions = list(system.transitions)
    positions = [i for i, t in enumerate(transitions) if (t.m, t.n) == (m, n)]
    if not positions:
        raise GammaSystemError(f"No explicit transition {m}->{n} to mutate.")
    if name not in MAP_NAMES:
        raise GammaSystemError(f"Unknown structure map {name!r}.")

    transition = transitions[positions[0]]
    f = transition.get(name)
    if not (0 <= row < f.target.rank and 0 <= column < f.source.rank):
        raise GammaSystemError(
            f"Entry ({row}, {column}) is outside the {f.target.rank}x{f.source.rank} "
            f"matrix of {name}."
        )
    e_target, e_source = f.target.divisors[row], f.source.divisors[column]
    step = e_target // min(e_target, e_source)
    matrix = f.matrix.copy()
    matrix[row, column] = matrix[row, column] + step
    logger.debug(
        "Mutating %s of %s->%s at (%s, %s) by %s", name, m, n, row, column, step
    )

    corrupted = ModuleMap(f.source, f.target, matrix)
    transitions[positions[0]] = replace(transition, **{name: corrupted})
    return system.with_transitions(transitions)
