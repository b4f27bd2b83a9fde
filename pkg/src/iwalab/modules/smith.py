from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
import numpy.typing as npt


IntMatrix = npt.NDArray[np.object_]


def as_matrix(
    rows: Sequence[Sequence[int]] | IntMatrix, columns: int | None = None
) -> IntMatrix:
    """Exact integer matrix (object dtype), keeping the shape of empty inputs."""
    matrix = np.array(rows, dtype=object)
    if matrix.size == 0:
        width = columns if columns is not None else 0
        if matrix.ndim == 2 and columns is None:
            width = matrix.shape[1]
        height = matrix.shape[0] if matrix.ndim >= 1 else 0
        return np.zeros((height, width), dtype=object)
    if matrix.ndim == 1:
        matrix = matrix.reshape(1, -1)
    return matrix.astype(object)


def identity(size: int) -> IntMatrix:
    matrix = np.zeros((size, size), dtype=object)
    for i in range(size):
        matrix[i, i] = 1
    return matrix


def zeros(rows: int, columns: int) -> IntMatrix:
    return np.zeros((rows, columns), dtype=object)


def matmul(left: IntMatrix, right: IntMatrix) -> IntMatrix:
    if left.shape[1] != right.shape[0]:
        raise ValueError(f"Cannot multiply {left.shape} by {right.shape}.")
    if left.shape[1] == 0 or left.shape[0] == 0 or right.shape[1] == 0:
        return zeros(left.shape[0], right.shape[1])
    return (left @ right).astype(object)


def block_diagonal(*blocks: IntMatrix) -> IntMatrix:
    rows = sum(b.shape[0] for b in blocks)
    columns = sum(b.shape[1] for b in blocks)
    result = zeros(rows, columns)
    r = c = 0
    for block in blocks:
        result[r : r + block.shape[0], c : c + block.shape[1]] = block
        r += block.shape[0]
        c += block.shape[1]
    return result


def exgcd(a: int, b: int) -> IntMatrix:
    """
    A 2x2 integer matrix M of determinant 1 with M @ [a, b] = [gcd(a, b), 0].

    If a divides b, M[0, 1] is 0.
    """
    if b == 0:
        return identity(2)

    a_sign = -1 if a < 0 else 1
    b_sign = -1 if b < 0 else 1
    a, b = a * a_sign, b * b_sign

    # Euclid on [a, b] with row operations tracked on the identity
    m = np.array([[a, 1, 0], [b, 0, 1]], dtype=object)
    m = m[::-1]
    while m[1, 0] != 0:
        q = m[0, 0] // m[1, 0]
        m[0] -= q * m[1]
        m = m[::-1]

    g = m[0, 0]
    m = m[:, 1:] * np.array([a_sign, b_sign], dtype=object)
    m[1] = [-b_sign * b // g, a_sign * a // g]
    return m.astype(object)


def _inverse_2x2(m: IntMatrix) -> IntMatrix:
    return np.array([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]], dtype=object)


@dataclass(frozen=True)
class SmithForm:
    """
    left @ matrix @ right == diagonal, with unimodular left and right.

    The diagonal entries d_1 | d_2 | ... are nonnegative, zeros last.
    """

    matrix: IntMatrix
    diagonal: IntMatrix
    left: IntMatrix
    right: IntMatrix
    left_inverse: IntMatrix
    right_inverse: IntMatrix

    @property
    def divisors(self) -> tuple[int, ...]:
        """Diagonal entries, one per column; columns past the rows count as 0."""
        rows, columns = self.diagonal.shape
        entries = [int(self.diagonal[i, i]) for i in range(min(rows, columns))]
        return tuple(entries + [0] * (columns - len(entries)))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.divisors if d)

    def kernel(self) -> IntMatrix:
        """Columns spanning the integer solutions of matrix @ x = 0."""
        free = [i for i, d in enumerate(self.divisors) if d == 0]
        if not free:
            return zeros(self.matrix.shape[1], 0)
        return self.right[:, free].astype(object)

    def solve(self, target: Sequence[int] | IntMatrix) -> IntMatrix | None:
        """An integer x with matrix @ x == target, or None."""
        rows, columns = self.matrix.shape
        target = np.array(target, dtype=object).reshape(rows)
        image = matmul(self.left, target.reshape(rows, 1)).reshape(rows)
        divisors = self.divisors
        solution = zeros(columns, 1).reshape(columns)
        for i in range(rows):
            d = divisors[i] if i < columns else 0
            if d == 0:
                if image[i] != 0:
                    return None
                continue
            if image[i] % d:
                return None
            solution[i] = image[i] // d
        return matmul(self.right, solution.reshape(columns, 1)).reshape(columns)


def smith_form(matrix: Sequence[Sequence[int]] | IntMatrix) -> SmithForm:
    original = as_matrix(matrix)
    rows, columns = original.shape
    d = original.copy()
    left, left_inverse = identity(rows), identity(rows)
    right, right_inverse = identity(columns), identity(columns)

    def row_operation(i: int, j: int, m: IntMatrix) -> None:
        d[[i, j]] = m @ d[[i, j]]
        left[[i, j]] = m @ left[[i, j]]
        left_inverse[:, [i, j]] = left_inverse[:, [i, j]] @ _inverse_2x2(m)

    def column_operation(i: int, j: int, m: IntMatrix) -> None:
        d[:, [i, j]] = d[:, [i, j]] @ m
        right[:, [i, j]] = right[:, [i, j]] @ m
        right_inverse[[i, j]] = _inverse_2x2(m) @ right_inverse[[i, j]]

    def clear_column(i: int) -> bool:
        if all(d[j, i] == 0 for j in range(i + 1, rows)):
            return False
        for j in range(i + 1, rows):
            if d[j, i] != 0:
                row_operation(i, j, exgcd(d[i, i], d[j, i]))
        return True

    def clear_row(i: int) -> bool:
        if all(d[i, j] == 0 for j in range(i + 1, columns)):
            return False
        for j in range(i + 1, columns):
            if d[i, j] != 0:
                column_operation(i, j, exgcd(d[i, i], d[i, j]).T.copy())
        return True

    def swap(i: int, j: int) -> None:
        for target in (d, left):
            target[[i, j]] = target[[j, i]]
        left_inverse[:, [i, j]] = left_inverse[:, [j, i]]
        for target in (d, right):
            target[:, [i, j]] = target[:, [j, i]]
        right_inverse[[i, j]] = right_inverse[[j, i]]

    size = min(rows, columns)
    if size == 0:
        return SmithForm(original, d, left, right, left_inverse, right_inverse)

    for i in range(size):
        clear_column(i)
        while clear_row(i) and clear_column(i):
            pass

    for i in range(size):
        if d[i, i] < 0:
            d[i] = -d[i]
            left[i] = -left[i]
            left_inverse[:, i] = -left_inverse[:, i]

    # zeros last, keeping the order of the others
    nonzero = [i for i in range(size) if d[i, i] != 0]
    for target, source in enumerate(nonzero):
        if target != source:
            swap(target, source)

    # divisibility chain
    rank = len(nonzero)
    for i in range(rank):
        for j in range(i + 1, rank):
            if d[j, j] % d[i, i] == 0:
                continue
            row_operation(i, j, np.array([[1, 1], [0, 1]], dtype=object))
            while clear_row(i) | clear_column(i):
                pass
            for k in (i, j):
                if d[k, k] < 0:
                    d[k] = -d[k]
                    left[k] = -left[k]
                    left_inverse[:, k] = -left_inverse[:, k]

    return SmithForm(original, d, left, right, left_inverse, right_inverse)


def diagonal(entries: Sequence[int]) -> IntMatrix:
    matrix = zeros(len(entries), len(entries))
    for i, entry in enumerate(entries):
        matrix[i, i] = entry
    return matrix


def from_columns(columns: Sequence[Sequence[int] | IntMatrix], rows: int) -> IntMatrix:
    matrix = zeros(rows, len(columns))
    for j, column in enumerate(columns):
        matrix[:, j] = np.array(column, dtype=object).reshape(rows)
    return matrix


def with_rows(matrix: Sequence[Sequence[int]] | IntMatrix, rows: int) -> IntMatrix:
    """A copy of ``matrix`` as a 2-D array with ``rows`` rows."""
    array = np.array(matrix, dtype=object)
    if array.size == 0:
        columns = array.shape[1] if array.ndim == 2 else 0
        return zeros(rows, columns)
    return array.reshape(rows, -1).copy()
