from __future__ import annotations

import itertools
import logging
import math

from dataclasses import dataclass
from typing import Iterator
from typing import NamedTuple
from typing import Sequence

import numpy as np

from iwalab.algebra.types import valuation
from iwalab.modules.exceptions import ModuleError
from iwalab.modules.exceptions import ModuleMapError
from iwalab.modules.smith import IntMatrix
from iwalab.modules.smith import as_matrix
from iwalab.modules.smith import block_diagonal
from iwalab.modules.smith import diagonal
from iwalab.modules.smith import from_columns
from iwalab.modules.smith import identity
from iwalab.modules.smith import matmul
from iwalab.modules.smith import smith_form
from iwalab.modules.smith import with_rows
from iwalab.modules.smith import zeros


logger = logging.getLogger(__name__)

ENUMERATION_LIMIT = 2**16


def reduce_rows(matrix: IntMatrix, divisors: Sequence[int]) -> IntMatrix:
    """Reduce row k of ``matrix`` modulo ``divisors[k]``."""
    result = with_rows(matrix, len(divisors))
    for k, divisor in enumerate(divisors):
        result[k] = result[k] % divisor
    return result


def as_column(vector: Sequence[int] | IntMatrix) -> IntMatrix:
    array = np.array(vector, dtype=object)
    return array.reshape(array.size, 1)


def first_nonzero_column(matrix: IntMatrix, divisors: Sequence[int]) -> int | None:
    """Index of a column not congruent to zero modulo the row divisors."""
    reduced = reduce_rows(matrix, divisors)
    for j in range(reduced.shape[1]):
        if any(reduced[:, j]):
            return j
    return None


def matrix_power(
    matrix: IntMatrix, exponent: int, divisors: Sequence[int]
) -> IntMatrix:
    result = identity(len(divisors))
    base = reduce_rows(matrix, divisors)
    while exponent:
        if exponent & 1:
            result = reduce_rows(matmul(result, base), divisors)
        base = reduce_rows(matmul(base, base), divisors)
        exponent >>= 1
    return result


@dataclass(frozen=True, eq=False)
class FiniteModule:
    """
    A finite abelian p-group with a commuting action of Gamma_level.

    Always in Smith coordinates: the group is the direct sum of Z/e_k for the
    ``divisors`` e_1 | e_2 | ..., and ``actions[i]`` is the matrix of g_i in
    that basis (columns are images of generators).
    """

    p: int
    level: int
    divisors: tuple[int, ...]
    actions: tuple[IntMatrix, ...]

    def __post_init__(self) -> None:
        divisors = tuple(int(e) for e in self.divisors)
        for e in divisors:
            if e <= 1 or e != self.p ** valuation(self.p, e):
                raise ModuleError(
                    f"Elementary divisor {e} is not a power of {self.p} above 1."
                )
        for e, f in zip(divisors, divisors[1:]):
            if f % e:
                raise ModuleError(
                    f"Elementary divisors {divisors} do not form a chain."
                )
        object.__setattr__(self, "divisors", divisors)

        rank = len(divisors)
        actions = []
        for i, action in enumerate(self.actions):
            matrix = as_matrix(action, columns=rank)
            if matrix.shape != (rank, rank):
                raise ModuleError(
                    f"Action of g{i + 1} has shape {matrix.shape}, "
                    f"expected {(rank, rank)}."
                )
            actions.append(reduce_rows(matrix, divisors))
        object.__setattr__(self, "actions", tuple(actions))
        self._check_actions()

    def _check_actions(self) -> None:
        for i, action in enumerate(self.actions):
            column = self.ill_defined_column(action)
            if column is not None:
                raise ModuleError(
                    f"Action of g{i + 1} does not respect the relation of "
                    f"generator {column}."
                )
            power = matrix_power(action, self.p**self.level, self.divisors)
            if not self.congruent(power, identity(self.rank)):
                raise ModuleError(
                    f"Action of g{i + 1} does not factor through level {self.level}."
                )
        for i, j in itertools.combinations(range(self.d), 2):
            left = matmul(self.actions[i], self.actions[j])
            right = matmul(self.actions[j], self.actions[i])
            if not self.congruent(left, right):
                raise ModuleError(f"Actions of g{i + 1} and g{j + 1} do not commute.")

    @classmethod
    def zero(cls, p: int, level: int, d: int) -> FiniteModule:
        return cls(p, level, (), tuple(zeros(0, 0) for _ in range(d)))

    @classmethod
    def trivial_action(
        cls, p: int, level: int, d: int, divisors: Sequence[int]
    ) -> FiniteModule:
        rank = len(divisors)
        return cls(p, level, tuple(divisors), tuple(identity(rank) for _ in range(d)))

    @property
    def rank(self) -> int:
        return len(self.divisors)

    @property
    def d(self) -> int:
        return len(self.actions)

    @property
    def order(self) -> int:
        return math.prod(self.divisors)

    @property
    def exponent(self) -> int:
        return self.divisors[-1] if self.divisors else 1

    def is_zero(self) -> bool:
        return not self.divisors

    def reduce(self, vector: Sequence[int] | IntMatrix) -> IntMatrix:
        array = np.array(vector, dtype=object).reshape(self.rank)
        return np.array(
            [int(x) % e for x, e in zip(array, self.divisors)], dtype=object
        ).reshape(self.rank)

    def reduce_matrix(self, matrix: IntMatrix) -> IntMatrix:
        return reduce_rows(matrix, self.divisors)

    def congruent(self, left: IntMatrix, right: IntMatrix) -> bool:
        return first_nonzero_column(left - right, self.divisors) is None

    def is_zero_vector(self, vector: Sequence[int] | IntMatrix) -> bool:
        return not any(self.reduce(vector))

    def ill_defined_column(
        self, matrix: IntMatrix, source: Sequence[int] | None = None
    ) -> int | None:
        """Index of a source generator whose relation is not sent to zero."""
        source = self.divisors if source is None else source
        scaled = np.array(matrix, dtype=object).reshape(self.rank, len(source)).copy()
        for j, e in enumerate(source):
            scaled[:, j] = scaled[:, j] * e
        return first_nonzero_column(scaled, self.divisors)

    def basis(self) -> list[IntMatrix]:
        unit = identity(self.rank)
        return [unit[:, j].copy() for j in range(self.rank)]

    def zero_vector(self) -> IntMatrix:
        return np.zeros(self.rank, dtype=object)

    def action_power(self, index: int, exponent: int) -> IntMatrix:
        return matrix_power(
            self.actions[index], exponent % self.p**self.level, self.divisors
        )

    def monomial_matrix(self, exponents: Sequence[int]) -> IntMatrix:
        result = identity(self.rank)
        for index, exponent in enumerate(exponents):
            if exponent % self.p**self.level:
                result = self.reduce_matrix(
                    matmul(result, self.action_power(index, exponent))
                )
        return result

    def act_on(
        self, exponents: Sequence[int], vector: Sequence[int] | IntMatrix
    ) -> IntMatrix:
        image = matmul(self.monomial_matrix(exponents), as_column(vector))
        return self.reduce(image)

    def scalar_matrix(self, value: int) -> IntMatrix:
        return self.reduce_matrix(identity(self.rank) * value)

    def inverse_action(self, index: int) -> IntMatrix:
        return self.action_power(index, -1)

    def with_actions(self, actions: Sequence[IntMatrix]) -> FiniteModule:
        return FiniteModule(self.p, self.level, self.divisors, tuple(actions))

    def same_as(self, other: FiniteModule) -> bool:
        """Literal equality of the normalized data."""
        return (
            (self.p, self.level, self.divisors)
            == (other.p, other.level, other.divisors)
            and len(self.actions) == len(other.actions)
            and all(self.congruent(a, b) for a, b in zip(self.actions, other.actions))
        )

    def elements(self) -> Iterator[IntMatrix]:
        if self.order > ENUMERATION_LIMIT:
            raise ModuleError(
                f"Refusing to enumerate a module of order {self.order} "
                f"(limit {ENUMERATION_LIMIT})."
            )
        for entries in itertools.product(*(range(e) for e in self.divisors)):
            yield np.array(entries, dtype=object).reshape(self.rank)

    def describe(self) -> str:
        if not self.divisors:
            return "0"
        return " x ".join(f"Z/{e}" for e in self.divisors)

    def __repr__(self) -> str:
        return f"FiniteModule(p={self.p}, level={self.level}, {self.describe()})"


class Presentation(NamedTuple):
    module: FiniteModule
    coords: IntMatrix
    basis: IntMatrix


def from_presentation(
    p: int,
    level: int,
    relations: IntMatrix,
    actions: Sequence[IntMatrix],
    torsion: bool = False,
) -> Presentation:
    """
    Normalize Z^k / rows(relations) with the given actions.

    Only the p-primary part is kept. A free part is an error unless
    ``torsion`` is set, in which case it is dropped. ``coords`` sends old
    coordinates to the new generators and ``basis`` holds the new generators
    in old coordinates.
    """
    k = np.shape(actions[0])[0] if actions else np.shape(relations)[1]
    relations = np.array(relations, dtype=object)
    relations = zeros(0, k) if relations.size == 0 else relations.reshape(-1, k)
    snf = smith_form(relations)

    kept, divisors = [], []
    for i, divisor in enumerate(snf.divisors):
        if divisor == 0:
            if not torsion:
                raise ModuleError("The presentation has a free part.")
            continue
        part = p ** valuation(p, divisor)
        if part > 1:
            kept.append(i)
            divisors.append(part)

    coords = snf.right.T[kept, :].reshape(len(kept), k)
    basis = snf.right_inverse.T[:, kept].reshape(k, len(kept))
    new_actions = [
        reduce_rows(matmul(matmul(coords, as_matrix(a, columns=k)), basis), divisors)
        for a in actions
    ]
    module = FiniteModule(p, level, tuple(divisors), tuple(new_actions))
    return Presentation(module, coords, basis)


@dataclass(frozen=True, eq=False)
class ModuleMap:
    """
    A group homomorphism between finite modules, checked at construction.

    ``matrix`` has one column per source generator holding its image.
    """

    source: FiniteModule
    target: FiniteModule
    matrix: IntMatrix
    equivariant: bool = False

    def __post_init__(self) -> None:
        matrix = np.array(self.matrix, dtype=object)
        if matrix.size == 0:
            matrix = zeros(self.target.rank, self.source.rank)
        if matrix.shape != (self.target.rank, self.source.rank):
            raise ModuleMapError(
                f"Map matrix has shape {matrix.shape}, expected "
                f"{(self.target.rank, self.source.rank)}."
            )
        matrix = self.target.reduce_matrix(matrix)
        object.__setattr__(self, "matrix", matrix)

        column = self.target.ill_defined_column(matrix, self.source.divisors)
        if column is not None:
            raise ModuleMapError(
                f"Map does not respect the relation of source generator {column}."
            )
        if self.equivariant:
            witness = self.equivariance_witness()
            if witness is not None:
                raise ModuleMapError(f"Map is not equivariant: {witness}.")

    @classmethod
    def identity(cls, module: FiniteModule) -> ModuleMap:
        return cls(module, module, identity(module.rank), True)

    @classmethod
    def zero(cls, source: FiniteModule, target: FiniteModule) -> ModuleMap:
        return cls(source, target, zeros(target.rank, source.rank), True)

    @classmethod
    def scalar(cls, module: FiniteModule, value: int) -> ModuleMap:
        return cls(module, module, module.scalar_matrix(value), True)

    def __call__(self, vector: Sequence[int] | IntMatrix) -> IntMatrix:
        return self.target.reduce(matmul(self.matrix, as_column(vector)))

    def compose(self, other: ModuleMap) -> ModuleMap:
        """self after other."""
        if other.target is not self.source and not other.target.same_as(self.source):
            raise ModuleMapError("Cannot compose maps with mismatched modules.")
        return ModuleMap(
            other.source,
            self.target,
            matmul(self.matrix, other.matrix),
            self.equivariant and other.equivariant,
        )

    def equivariance_witness(self) -> str | None:
        for i, (a, b) in enumerate(zip(self.source.actions, self.target.actions)):
            left = matmul(self.matrix, a)
            right = matmul(b, self.matrix)
            column = first_nonzero_column(left - right, self.target.divisors)
            if column is not None:
                return f"g{i + 1} on source generator {column}"
        return None

    def first_difference(self, other: ModuleMap) -> int | None:
        """Index of a source generator on which the two maps differ."""
        return first_nonzero_column(self.matrix - other.matrix, self.target.divisors)

    def equals(self, other: ModuleMap) -> bool:
        return self.first_difference(other) is None

    def is_zero(self) -> bool:
        return not any(self.matrix.flatten())

    def kernel(self) -> Subquotient:
        stacked = np.hstack([self.matrix, diagonal(self.target.divisors)])
        generators = smith_form(stacked).kernel()[: self.source.rank, :]
        return Subquotient(self.source, generators)

    def image(self) -> Subquotient:
        return Subquotient(self.target, self.matrix)

    def cokernel(self) -> Subquotient:
        return Subquotient(self.target, identity(self.target.rank), self.matrix)

    def is_injective(self) -> bool:
        return self.kernel().order == 1

    def is_surjective(self) -> bool:
        return self.image().order == self.target.order

    def is_isomorphism(self) -> bool:
        return self.source.order == self.target.order and self.is_injective()


class Subquotient:
    """
    (numerator + denominator) / denominator, inside an ambient module.

    Both families are given as columns of ambient coordinates. One class
    serves submodules (no denominator), quotients (identity numerator) and
    general subquotients. The families must be stable under the action.
    """

    def __init__(
        self,
        ambient: FiniteModule,
        numerator: IntMatrix,
        denominator: IntMatrix | None = None,
    ) -> None:
        rank = ambient.rank
        self.ambient = ambient
        self.numerator = with_rows(numerator, rank)
        if denominator is None:
            denominator = zeros(rank, 0)
        self.denominator = with_rows(denominator, rank)
        self._k = self.numerator.shape[1]

        relations_block = diagonal(ambient.divisors)
        self._denominator_solver = smith_form(
            np.hstack([self.denominator, relations_block])
        )
        self._solver = smith_form(
            np.hstack([self.numerator, self.denominator, relations_block])
        )
        self._check_denominator()

        relations = self._solver.kernel()[: self._k, :].T
        actions = [self._numerator_action(i, a) for i, a in enumerate(ambient.actions)]
        presentation = from_presentation(ambient.p, ambient.level, relations, actions)
        self.module = presentation.module
        self._coords = presentation.coords
        self._basis = presentation.basis

    def _check_denominator(self) -> None:
        for i, action in enumerate(self.ambient.actions):
            for j in range(self.denominator.shape[1]):
                image = matmul(action, self.denominator[:, [j]])
                if self._denominator_solver.solve(image) is None:
                    raise ModuleError(
                        f"Denominator is not stable under g{i + 1} (column {j})."
                    )

    def _numerator_action(self, index: int, action: IntMatrix) -> IntMatrix:
        result = zeros(self._k, self._k)
        for j in range(self._k):
            image = matmul(action, self.numerator[:, [j]])
            solution = self._solver.solve(image)
            if solution is None:
                raise ModuleError(
                    f"Numerator is not stable under g{index + 1} (column {j})."
                )
            result[:, j] = solution[: self._k]
        return result

    @property
    def order(self) -> int:
        return self.module.order

    def numerator_coordinates(self) -> IntMatrix:
        """Generators as combinations of the numerator columns."""
        return self._basis.copy()

    def inclusion_matrix(self) -> IntMatrix:
        """Ambient coordinates of representatives of the generators."""
        return self.ambient.reduce_matrix(matmul(self.numerator, self._basis))

    def lift(self, vector: Sequence[int] | IntMatrix) -> IntMatrix:
        return self.ambient.reduce(matmul(self.inclusion_matrix(), as_column(vector)))

    def contains(self, vector: Sequence[int] | IntMatrix) -> bool:
        return self._solver.solve(np.array(vector, dtype=object)) is not None

    def is_trivial_class(self, vector: Sequence[int] | IntMatrix) -> bool:
        """Whether an ambient vector lies in the denominator."""
        solution = self._denominator_solver.solve(np.array(vector, dtype=object))
        return solution is not None

    def project(self, vector: Sequence[int] | IntMatrix) -> IntMatrix | None:
        """Class of an ambient vector lying in the numerator, else None."""
        solution = self._solver.solve(np.array(vector, dtype=object))
        if solution is None:
            return None
        return self.module.reduce(matmul(self._coords, as_column(solution[: self._k])))

    def projection(self) -> ModuleMap:
        """Quotient map ambient -> module, when the numerator is everything."""
        columns = []
        for vector in self.ambient.basis():
            image = self.project(vector)
            if image is None:
                raise ModuleMapError("The numerator is not the whole ambient module.")
            columns.append(image)
        return ModuleMap(
            self.ambient, self.module, from_columns(columns, self.module.rank), True
        )

    def inclusion(self) -> ModuleMap:
        """Inclusion module -> ambient, when there is no denominator."""
        if self.denominator.shape[1]:
            raise ModuleMapError("A proper subquotient has no inclusion map.")
        return ModuleMap(self.module, self.ambient, self.inclusion_matrix(), True)


def induced_map(
    f: ModuleMap, source: Subquotient, target: Subquotient, equivariant: bool = True
) -> ModuleMap:
    columns = []
    for j, vector in enumerate(source.module.basis()):
        image = target.project(f(source.lift(vector)))
        if image is None:
            raise ModuleMapError(
                f"Generator {j} of the source subquotient leaves the target numerator."
            )
        columns.append(image)
    return ModuleMap(
        source.module,
        target.module,
        from_columns(columns, target.module.rank),
        equivariant,
    )


class DirectSum(NamedTuple):
    module: FiniteModule
    injections: tuple[ModuleMap, ModuleMap]
    projections: tuple[ModuleMap, ModuleMap]


def direct_sum(x: FiniteModule, y: FiniteModule) -> DirectSum:
    if (x.p, x.level, x.d) != (y.p, y.level, y.d):
        raise ModuleError("Direct sum of modules over different groups.")
    relations = diagonal(x.divisors + y.divisors)
    actions = [block_diagonal(a, b) for a, b in zip(x.actions, y.actions)]
    presentation = from_presentation(x.p, x.level, relations, actions)
    total = presentation.module
    coords, basis = presentation.coords, presentation.basis
    injections = (
        ModuleMap(x, total, coords[:, : x.rank], True),
        ModuleMap(y, total, coords[:, x.rank :], True),
    )
    projections = (
        ModuleMap(total, x, basis[: x.rank, :], True),
        ModuleMap(total, y, basis[x.rank :, :], True),
    )
    return DirectSum(total, injections, projections)
