from __future__ import annotations

import logging

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from iwalab.algebra.types import GroupVector
from iwalab.modules.module import FiniteModule
from iwalab.modules.module import Subquotient
from iwalab.modules.pairing import mod_one
from iwalab.modules.smith import IntMatrix
from iwalab.systems.derived import kernel_system
from iwalab.systems.exceptions import GammaSystemError
from iwalab.systems.report import CheckResult
from iwalab.systems.report import SystemReport
from iwalab.systems.system import GammaSystem


logger = logging.getLogger(__name__)

Exponents = tuple[int, ...]


@dataclass(frozen=True)
class Functional:
    """A homomorphism module -> Q/Z, given by its values on generators."""

    module: FiniteModule
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        values = tuple(mod_one(Fraction(v)) for v in self.values)
        if len(values) != self.module.rank:
            raise GammaSystemError(
                f"{len(values)} values for a module with {self.module.rank} generators."
            )
        for j, (value, e) in enumerate(zip(values, self.module.divisors)):
            if (value * e).denominator != 1:
                raise GammaSystemError(
                    f"Value {value} on generator {j} is not killed by its order {e}."
                )
        object.__setattr__(self, "values", values)

    @classmethod
    def random(cls, module: FiniteModule, rng: np.random.Generator) -> Functional:
        values = [Fraction(int(rng.integers(0, e)), e) for e in module.divisors]
        return cls(module, tuple(values))

    def __call__(self, vector: Sequence[int] | IntMatrix) -> Fraction:
        entries = np.array(vector, dtype=object).reshape(self.module.rank)
        total = sum((int(x) * v for x, v in zip(entries, self.values)), Fraction(0))
        return mod_one(total)

    def compose(self, matrix: IntMatrix, source: FiniteModule) -> Functional:
        """self after the map with the given matrix."""
        values = [self(matrix[:, j]) for j in range(source.rank)]
        return Functional(source, tuple(values))


@dataclass(frozen=True)
class FourierHat:
    """
    x -> sum over Gamma_n of f(g^-1 x) g, with coefficients in Q/Z.

    ``table[j][g]`` is the coefficient of g in the image of generator j.
    """

    module: FiniteModule
    elements: tuple[Exponents, ...]
    table: tuple[tuple[Fraction, ...], ...]

    def index(self, exponents: Sequence[int]) -> int:
        modulus = self.module.p**self.module.level
        return self.elements.index(tuple(e % modulus for e in exponents))

    def __call__(self, vector: Sequence[int] | IntMatrix) -> tuple[Fraction, ...]:
        entries = np.array(vector, dtype=object).reshape(self.module.rank)
        totals = [Fraction(0)] * len(self.elements)
        for x, row in zip(entries, self.table):
            if int(x):
                totals = [t + int(x) * c for t, c in zip(totals, row)]
        return tuple(mod_one(t) for t in totals)

    def shift(
        self, coefficients: Sequence[Fraction], generator: int
    ) -> tuple[Fraction, ...]:
        """g_generator times an element of Q_n / Lambda_n."""
        result = [Fraction(0)] * len(self.elements)
        for exponents, c in zip(self.elements, coefficients):
            moved = list(exponents)
            moved[generator] += 1
            result[self.index(moved)] = c
        return tuple(result)

    def project(
        self, coefficients: Sequence[Fraction], level: int
    ) -> dict[Exponents, Fraction]:
        """Image in Q_m / Lambda_m, exponents reduced modulo p^level."""
        modulus = self.module.p**level
        result: dict[Exponents, Fraction] = {}
        for exponents, c in zip(self.elements, coefficients):
            key = tuple(e % modulus for e in exponents)
            result[key] = mod_one(result.get(key, Fraction(0)) + c)
        return result


def fourier_hat(f: Functional) -> FourierHat:
    module = f.module
    elements = [
        g.exponents for g in GroupVector.all_elements(module.p, module.d, module.level)
    ]
    inverses = [module.monomial_matrix([-e for e in g]) for g in elements]
    table = tuple(
        tuple(f(inverse[:, j]) for inverse in inverses) for j in range(module.rank)
    )
    return FourierHat(module, tuple(elements), table)


def delta_e(hat: FourierHat) -> Functional:
    """The coefficient of the identity: the inverse of fourier_hat."""
    column = hat.index((0,) * hat.module.d)
    return Functional(hat.module, tuple(row[column] for row in hat.table))


def _round_trip(f: Functional, hat: FourierHat) -> str | None:
    back = delta_e(hat)
    for j, (x, y) in enumerate(zip(f.values, back.values)):
        if x != y:
            return f"delta_e(f^) = {y} != f = {x} on generator {j}"
    return None


def _linearity(hat: FourierHat) -> str | None:
    module = hat.module
    for i, action in enumerate(module.actions):
        for j in range(module.rank):
            left = hat(action[:, j])
            right = hat.shift(hat(module.basis()[j]), i)
            if left != right:
                return f"f^(g{i + 1} x) != g{i + 1} f^(x) on generator {j}"
    return None


def _compatibility(
    system: GammaSystem, m: int, n: int, f_n: Functional
) -> str | None:
    """p^(d(n-m)) f^_m(x) = pi(f^_n(r x)) for f_m = f_n after r."""
    r = system.transition(m, n).r_b
    low = system.level(m).b
    f_m = f_n.compose(r.matrix, low)
    hat_m, hat_n = fourier_hat(f_m), fourier_hat(f_n)
    scale = system.p ** (system.d * (n - m))
    for j, x in enumerate(low.basis()):
        projected = hat_n.project(hat_n(r(x)), m)
        expected = hat_m(x)
        for key, c in zip(hat_m.elements, expected):
            if mod_one(scale * c) != projected.get(key, Fraction(0)):
                return f"compatibility fails on generator {j} at {key}"
    return None


def _same_submodule(x: Subquotient, y: Subquotient) -> bool:
    if x.order != y.order:
        return False
    lifts = x.inclusion_matrix()
    return all(y.contains(lifts[:, j]) for j in range(lifts.shape[1]))


def _kernel_statement(system: GammaSystem) -> list[CheckResult]:
    """The annihilator of k(b_N) in a_n is the kernel of r on a_n."""
    top = system.max_level
    results = []
    for kernel in kernel_system(system):
        n = kernel.level
        image = system.transition(n, top).k_b.image()
        annihilator = system.level(n).pairing.annihilator(image, "right")
        witness = None
        if not _same_submodule(annihilator, kernel.a):
            witness = (
                f"annihilator of order {annihilator.order} against a kernel of "
                f"order {kernel.a.order}"
            )
        results.append(CheckResult.judge("fourier", "kernel", f"n={n}", witness))
    return results


def fourier_check(
    system: GammaSystem, samples: int = 100, seed: int = 0
) -> SystemReport:
    """
    Round trip, Lambda_n-linearity and level compatibility of f -> f^ on
    random functionals of b_n, plus the kernel statement on a_n.
    """
    rng = np.random.default_rng(seed)
    checks: list[CheckResult] = []
    for level in system.levels:
        n, module = level.level, level.b
        trip = linear = None
        for _ in range(samples):
            f = Functional.random(module, rng)
            hat = fourier_hat(f)
            trip = trip or _round_trip(f, hat)
            linear = linear or _linearity(hat)
        checks.append(CheckResult.judge("fourier", "round trip", f"n={n}", trip))
        checks.append(CheckResult.judge("fourier", "linearity", f"n={n}", linear))

    for m, n in system.pairs():
        witness = None
        for _ in range(samples):
            f_n = Functional.random(system.level(n).b, rng)
            witness = witness or _compatibility(system, m, n, f_n)
            if witness:
                break
        checks.append(
            CheckResult.judge("fourier", "compatibility", f"m={m},n={n}", witness)
        )

    checks.extend(_kernel_statement(system))
    failed = sum(not check.passed for check in checks)
    logger.info("Fourier checks: %s, %s failed", len(checks), failed)
    return SystemReport(tuple(checks), ())
