from __future__ import annotations

import logging

from typing import Sequence

import numpy as np

from iwalab.algebra.characters import Character
from iwalab.algebra.cyclotomic import cyclotomic_coefficients
from iwalab.algebra.cyclotomic import cyclotomic_degree
from iwalab.algebra.element import AlgebraElement
from iwalab.modules.exceptions import ModuleError
from iwalab.modules.module import FiniteModule
from iwalab.modules.module import ModuleMap
from iwalab.modules.module import Subquotient
from iwalab.modules.module import as_column
from iwalab.modules.smith import IntMatrix
from iwalab.modules.smith import block_diagonal
from iwalab.modules.smith import diagonal
from iwalab.modules.smith import identity
from iwalab.modules.smith import matmul
from iwalab.modules.smith import smith_form
from iwalab.modules.smith import zeros


logger = logging.getLogger(__name__)


def action_matrix(lam: AlgebraElement, module: FiniteModule) -> IntMatrix:
    """Matrix of multiplication by ``lam``, substituting A_i for g_i."""
    if lam.d != module.d:
        raise ModuleError(
            f"An element of rank {lam.d} cannot act on a module over rank {module.d}."
        )
    if lam.ring.kind == "cyclotomic":
        raise ModuleError("Cyclotomic coefficients do not act on a Z_p-module.")
    if lam.ring.kind == "modular" and module.exponent > 1:
        if lam.ring.modulus % module.exponent:
            raise ModuleError(
                f"Coefficients known {lam.ring} do not act on a module of "
                f"exponent {module.exponent}."
            )

    result = zeros(module.rank, module.rank)
    for exponents, coefficient in lam.terms:
        scale = int(coefficient)  # type: ignore[arg-type]
        result = result + scale * module.monomial_matrix(exponents)
    return module.reduce_matrix(result)


def act(
    lam: AlgebraElement, module: FiniteModule, vector: Sequence[int] | IntMatrix
) -> IntMatrix:
    return module.reduce(matmul(action_matrix(lam, module), as_column(vector)))


def multiplication_map(lam: AlgebraElement, module: FiniteModule) -> ModuleMap:
    return ModuleMap(module, module, action_matrix(lam, module), True)


def dual_matrix(
    matrix: IntMatrix, source: Sequence[int], target: Sequence[int]
) -> IntMatrix:
    """
    Matrix of the transpose of a map source -> target between dual bases.

    The dual basis f_k of Z/e_k sends the k-th generator to 1/e_k.
    """
    result = zeros(len(source), len(target))
    for k, e_target in enumerate(target):
        for j, e_source in enumerate(source):
            value = e_source * int(matrix[k, j])
            if value % e_target:
                raise ModuleError("The transposed map is not well defined.")
            result[j, k] = (value // e_target) % e_source
    return result


def dual(module: FiniteModule) -> FiniteModule:
    """Pontryagin dual with (g.f)(x) = f(g^-1 x), on the dual basis."""
    inverse_power = module.p**module.level - 1
    actions = [
        dual_matrix(
            module.action_power(i, inverse_power), module.divisors, module.divisors
        )
        for i in range(module.d)
    ]
    return FiniteModule(module.p, module.level, module.divisors, tuple(actions))


def dual_map(f: ModuleMap) -> ModuleMap:
    matrix = dual_matrix(f.matrix, f.source.divisors, f.target.divisors)
    return ModuleMap(dual(f.target), dual(f.source), matrix, f.equivariant)


def joint_kernel(module: FiniteModule, matrices: Sequence[IntMatrix]) -> Subquotient:
    """Common kernel of several endomorphism matrices."""
    if not matrices:
        return Subquotient(module, identity(module.rank))
    stacked = np.vstack(matrices)
    relations = block_diagonal(*(diagonal(module.divisors) for _ in matrices))
    generators = smith_form(np.hstack([stacked, relations])).kernel()
    return Subquotient(module, generators[: module.rank, :])


def _check_sublevel(module: FiniteModule, sublevel: int) -> None:
    if not 0 <= sublevel <= module.level:
        raise ModuleError(
            f"Sublevel {sublevel} is outside 0..{module.level} for this module."
        )


def augmentation_matrices(module: FiniteModule, sublevel: int = 0) -> list[IntMatrix]:
    """A_i^(p^sublevel) - I for every generator."""
    _check_sublevel(module, sublevel)
    step = module.p**sublevel
    return [
        module.reduce_matrix(module.action_power(i, step) - identity(module.rank))
        for i in range(module.d)
    ]


def invariants(module: FiniteModule, sublevel: int = 0) -> Subquotient:
    return joint_kernel(module, augmentation_matrices(module, sublevel))


def coinvariants(module: FiniteModule, sublevel: int = 0) -> Subquotient:
    matrices = augmentation_matrices(module, sublevel)
    denominator = np.hstack(matrices) if matrices else zeros(module.rank, 0)
    return Subquotient(module, identity(module.rank), denominator)


def companion_matrix(p: int, order: int) -> IntMatrix:
    """Multiplication by zeta on Z[zeta_{p^order}] in the power basis."""
    degree = cyclotomic_degree(p, order)
    coefficients = cyclotomic_coefficients(p, order)
    matrix = zeros(degree, degree)
    for i in range(1, degree):
        matrix[i, i - 1] = 1
    for i in range(degree):
        matrix[i, degree - 1] = -coefficients[i]
    return matrix


def extend_scalars(module: FiniteModule, order: int) -> tuple[FiniteModule, IntMatrix]:
    """
    The module tensored with Z_p[zeta_{p^order}], and the matrix of zeta.

    Generator (i, t) stands for x_i zeta^t.
    """
    degree = cyclotomic_degree(module.p, order)
    unit = identity(degree)
    divisors = tuple(e for e in module.divisors for _ in range(degree))
    actions = tuple(np.kron(a, unit).astype(object) for a in module.actions)
    extended = FiniteModule(module.p, module.level, divisors, actions)
    zeta = np.kron(identity(module.rank), companion_matrix(module.p, order))
    return extended, extended.reduce_matrix(zeta.astype(object))


def _rational_value(psi: Character, index: int) -> int | None:
    exponents = [0] * psi.d
    exponents[index] = 1
    order = psi.order_exponent
    if order == 0:
        return 1
    if psi.p == 2 and order == 1:
        return -1 if psi.value_exponent(exponents) else 1
    return None


def eigenspace(
    module: FiniteModule, psi: Character, extend: bool = False
) -> Subquotient:
    """
    {x : g.x = psi(g) x for every generator g}.

    Without ``extend`` the values of ``psi`` must be rational (only 1, and -1
    when p = 2). With ``extend`` the eigenspace is taken in the module with
    scalars extended to Z_p[zeta] for zeta of the order of ``psi``.
    """
    if psi.d != module.d or psi.p != module.p:
        raise ModuleError(f"Character {psi} does not match the module group.")
    if psi.order_exponent > module.level:
        raise ModuleError(
            f"Character {psi} does not factor through level {module.level}."
        )

    values = [_rational_value(psi, i) for i in range(module.d)]
    if all(v is not None for v in values):
        matrices = [
            module.reduce_matrix(a - identity(module.rank) * v)
            for a, v in zip(module.actions, values)
        ]
        return joint_kernel(module, matrices)

    if not extend:
        raise ModuleError(
            f"Character {psi} takes values outside Z_p; pass extend=True to "
            "adjoin them."
        )
    order = psi.order_exponent
    extended, zeta = extend_scalars(module, order)
    matrices = []
    for i, action in enumerate(extended.actions):
        exponents = [0] * module.d
        exponents[i] = 1
        power = identity(extended.rank)
        for _ in range(psi.value_exponent(exponents)):
            power = extended.reduce_matrix(matmul(power, zeta))
        matrices.append(extended.reduce_matrix(action - power))
    logger.debug("Eigenspace of %s computed over Z_p[zeta_%s]", psi, module.p**order)
    return joint_kernel(extended, matrices)
