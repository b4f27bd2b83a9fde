from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal
from typing import Sequence

import numpy as np

from iwalab.modules.exceptions import PairingError
from iwalab.modules.module import FiniteModule
from iwalab.modules.module import ModuleMap
from iwalab.modules.module import Subquotient
from iwalab.modules.operations import dual
from iwalab.modules.smith import IntMatrix


RationalMatrix = np.ndarray
Side = Literal["left", "right"]


def mod_one(value: Fraction | int) -> Fraction:
    value = Fraction(value)
    return value - (value.numerator // value.denominator)


def rational_matrix(rows: int, columns: int, values: object = None) -> RationalMatrix:
    matrix = np.empty((rows, columns), dtype=object)
    source = None if values is None else np.array(values, dtype=object)
    for i in range(rows):
        for j in range(columns):
            matrix[i, j] = mod_one(0 if source is None else source[i][j])
    return matrix


@dataclass(frozen=True, eq=False)
class PairingMatrix:
    """
    A bilinear pairing left x right -> Q/Z.

    ``values[i, j]`` is the pairing of the i-th generator of ``left`` with
    the j-th generator of ``right``, an exact rational in [0, 1).
    """

    left: FiniteModule
    right: FiniteModule
    values: RationalMatrix

    def __post_init__(self) -> None:
        rows, columns = self.left.rank, self.right.rank
        values = rational_matrix(rows, columns, self.values)
        for i, e_left in enumerate(self.left.divisors):
            for j, e_right in enumerate(self.right.divisors):
                value = values[i, j]
                scaled = (e_left * value, e_right * value)
                if any(x.denominator > 1 for x in scaled):
                    raise PairingError(
                        f"Pairing of generators {i} and {j} does not respect "
                        "the relations."
                    )
        object.__setattr__(self, "values", values)

    @classmethod
    def zero(cls, left: FiniteModule, right: FiniteModule) -> PairingMatrix:
        return cls(left, right, rational_matrix(left.rank, right.rank))

    @classmethod
    def evaluation(cls, module: FiniteModule) -> PairingMatrix:
        """x, f -> f(x) between a module and its dual."""
        values = rational_matrix(module.rank, module.rank)
        for i, e in enumerate(module.divisors):
            values[i, i] = Fraction(1, e)
        return cls(module, dual(module), values)

    def pair(
        self, x: Sequence[int] | IntMatrix, y: Sequence[int] | IntMatrix
    ) -> Fraction:
        x = np.array(x, dtype=object).reshape(self.left.rank)
        y = np.array(y, dtype=object).reshape(self.right.rank)
        total = Fraction(0)
        for i in range(self.left.rank):
            if not x[i]:
                continue
            for j in range(self.right.rank):
                total += int(x[i]) * int(y[j]) * self.values[i, j]
        return mod_one(total)

    def transpose(self) -> PairingMatrix:
        return PairingMatrix(self.right, self.left, self.values.T.copy())

    def left_map(self) -> ModuleMap:
        """left -> dual(right), x -> <x, .>."""
        matrix = np.zeros((self.right.rank, self.left.rank), dtype=object)
        for j, e in enumerate(self.right.divisors):
            for i in range(self.left.rank):
                matrix[j, i] = int(e * self.values[i, j])
        return ModuleMap(self.left, dual(self.right), matrix)

    def right_map(self) -> ModuleMap:
        """right -> dual(left), y -> <., y>."""
        return self.transpose().left_map()

    def invariance_witness(self) -> str | None:
        for index, (a, b) in enumerate(zip(self.left.actions, self.right.actions)):
            for i in range(self.left.rank):
                for j in range(self.right.rank):
                    if self.pair(a[:, i], b[:, j]) != self.values[i, j]:
                        return f"g{index + 1} on generators ({i}, {j})"
        return None

    def is_invariant(self) -> bool:
        return self.invariance_witness() is None

    def is_perfect(self) -> bool:
        if self.left.order != self.right.order:
            return False
        return self.left_map().is_injective() and self.right_map().is_injective()

    def annihilator(self, submodule: Subquotient, side: Side = "left") -> Subquotient:
        """
        Orthogonal complement of a submodule of one side, inside the other.

        ``side`` names the module ``submodule`` lives in.
        """
        pairing = self if side == "left" else self.transpose()
        if submodule.denominator.shape[1]:
            raise PairingError("Annihilators are taken of submodules only.")
        if submodule.ambient.rank != pairing.left.rank:
            raise PairingError("The submodule does not live on the paired side.")

        inside = submodule.module
        inclusion = submodule.inclusion_matrix()
        generators = pairing.right.basis()
        matrix = np.zeros((inside.rank, pairing.right.rank), dtype=object)
        for g, e in enumerate(inside.divisors):
            for j, y in enumerate(generators):
                value = pairing.pair(inclusion[:, g], y)
                matrix[g, j] = int(e * value)
        functionals = ModuleMap(pairing.right, dual(inside), matrix)
        return functionals.kernel()

    def restrict(self, left: Subquotient, right: Subquotient) -> PairingMatrix:
        """The pairing induced on subquotients, through representatives."""
        lifts_left = left.inclusion_matrix()
        lifts_right = right.inclusion_matrix()
        values = rational_matrix(left.module.rank, right.module.rank)
        for i in range(left.module.rank):
            for j in range(right.module.rank):
                values[i, j] = self.pair(lifts_left[:, i], lifts_right[:, j])
        return PairingMatrix(left.module, right.module, values)

    def format_values(self) -> list[list[str]]:
        return [[str(value) for value in row] for row in self.values]
