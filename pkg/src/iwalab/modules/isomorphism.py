from __future__ import annotations

import logging
import math

from dataclasses import dataclass
from typing import Iterator
from typing import Literal
from typing import Sequence

import numpy as np

from iwalab.algebra.types import GroupVector
from iwalab.modules.exceptions import ModuleError
from iwalab.modules.module import FiniteModule
from iwalab.modules.module import ModuleMap
from iwalab.modules.module import Subquotient
from iwalab.modules.module import as_column
from iwalab.modules.operations import augmentation_matrices
from iwalab.modules.operations import invariants
from iwalab.modules.smith import IntMatrix
from iwalab.modules.smith import diagonal
from iwalab.modules.smith import from_columns
from iwalab.modules.smith import matmul
from iwalab.modules.smith import smith_form


logger = logging.getLogger(__name__)

IsoVerdict = Literal["isomorphic", "not isomorphic", "undetermined"]

DEFAULT_NODE_BUDGET = 20000


@dataclass(frozen=True)
class IsomorphismSearch:
    verdict: IsoVerdict
    nodes: int
    witness: ModuleMap | None = None
    reason: str | None = None


def radical(module: FiniteModule) -> IntMatrix:
    """Generators of m x, m = (p, g_1 - 1, ..., g_d - 1) the maximal ideal."""
    return np.hstack([module.scalar_matrix(module.p), *augmentation_matrices(module)])


def minimal_generators(module: FiniteModule) -> list[IntMatrix]:
    """
    Basis vectors whose classes form a basis of x / m x.

    By Nakayama they generate the module over the group ring, and no smaller
    family does.
    """
    chosen: list[IntMatrix] = []
    base = radical(module)
    for vector in module.basis():
        span = Subquotient(module, np.hstack([base, *(as_column(c) for c in chosen)]))
        if not span.contains(vector):
            chosen.append(vector)
    return chosen


def additive_order(module: FiniteModule, vector: Sequence[int] | IntMatrix) -> int:
    reduced = module.reduce(vector)
    return max(
        [1] + [e // math.gcd(int(x), e) for x, e in zip(reduced, module.divisors) if x]
    )


def _orbit_columns(module: FiniteModule, vectors: Sequence[IntMatrix]) -> IntMatrix:
    columns = []
    elements = list(GroupVector.all_elements(module.p, module.d, module.level))
    for vector in vectors:
        for g in elements:
            columns.append(module.act_on(g.exponents, vector))
    return from_columns(columns, module.rank)


def obstruction(x: FiniteModule, y: FiniteModule) -> str | None:
    """A cheap invariant telling x and y apart, if any."""
    if x.divisors != y.divisors:
        return f"elementary divisors {x.divisors} != {y.divisors}"
    if x.d != y.d or x.level != y.level:
        return "modules over different groups"
    fixed_x, fixed_y = invariants(x).module.divisors, invariants(y).module.divisors
    if fixed_x != fixed_y:
        return f"invariants {fixed_x} != {fixed_y}"
    if len(minimal_generators(x)) != len(minimal_generators(y)):
        return "different numbers of generators"
    return None


class _Search:
    def __init__(self, x: FiniteModule, y: FiniteModule, budget: int) -> None:
        self.x, self.y, self.budget = x, y, budget
        self.nodes = 0
        self.generators = minimal_generators(x)
        self.orders = [additive_order(x, v) for v in self.generators]
        spanning = _orbit_columns(x, self.generators)
        solver = smith_form(np.hstack([spanning, diagonal(x.divisors)]))
        width = spanning.shape[1]
        solutions = []
        for vector in x.basis():
            solution = solver.solve(vector)
            if solution is None:
                raise ModuleError("Minimal generators do not span the module.")
            solutions.append(solution[:width])
        self.coordinates = from_columns(solutions, width)
        self.y_radical = radical(y)

    def candidates(self, chosen: list[IntMatrix]) -> Iterator[IntMatrix]:
        order = self.orders[len(chosen)]
        span = Subquotient(
            self.y, np.hstack([self.y_radical, *(as_column(c) for c in chosen)])
        )
        for vector in self.y.elements():
            if additive_order(self.y, vector) == order and not span.contains(vector):
                yield vector

    def attempt(self, images: list[IntMatrix]) -> ModuleMap | None:
        matrix = matmul(_orbit_columns(self.y, images), self.coordinates)
        try:
            f = ModuleMap(self.x, self.y, matrix, True)
        except ModuleError:
            return None
        return f if f.is_isomorphism() else None

    def run(self, chosen: list[IntMatrix]) -> ModuleMap | None:
        if len(chosen) == len(self.generators):
            return self.attempt(chosen)
        for vector in self.candidates(chosen):
            self.nodes += 1
            if self.nodes > self.budget:
                return None
            found = self.run(chosen + [vector])
            if found is not None:
                return found
        return None


def find_isomorphism(
    x: FiniteModule, y: FiniteModule, node_budget: int = DEFAULT_NODE_BUDGET
) -> IsomorphismSearch:
    """
    Search for an equivariant isomorphism x -> y.

    Images of a minimal generating family are tried by backtracking; a search
    cut short by ``node_budget`` is "undetermined", never "not isomorphic".
    """
    if x.is_zero() and y.is_zero() and x.d == y.d:
        return IsomorphismSearch("isomorphic", 0, ModuleMap.zero(x, y))
    reason = obstruction(x, y)
    if reason is not None:
        return IsomorphismSearch("not isomorphic", 0, reason=reason)

    search = _Search(x, y, node_budget)
    try:
        found = search.run([])
    except ModuleError as e:
        return IsomorphismSearch("undetermined", search.nodes, reason=e.message)
    logger.debug("Isomorphism search visited %s nodes", search.nodes)
    if found is not None:
        return IsomorphismSearch("isomorphic", search.nodes, found)
    if search.nodes > node_budget:
        return IsomorphismSearch(
            "undetermined", search.nodes, reason=f"node budget {node_budget} exhausted"
        )
    return IsomorphismSearch(
        "not isomorphic", search.nodes, reason="no generator images fit"
    )
