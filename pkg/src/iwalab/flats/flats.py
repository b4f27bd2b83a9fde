from __future__ import annotations

import itertools
import logging

from dataclasses import dataclass
from typing import Iterator
from typing import Literal
from typing import Sequence

from iwalab.algebra.characters import Character
from iwalab.algebra.characters import enumerate_characters
from iwalab.algebra.characters import galois_orbit
from iwalab.algebra.element import AlgebraElement
from iwalab.flats.exceptions import FlatError
from iwalab.flats.zeros import DEFAULT_BUDGET
from iwalab.flats.zeros import zero_set_level
from iwalab.modules.smith import smith_form


logger = logging.getLogger(__name__)

Vector = tuple[int, ...]

NSVerdictName = Literal["holds", "violated", "undetermined"]


@dataclass(frozen=True)
class FlatLevel:
    """
    The characters omega of Gamma_level with omega(g^basis[i]) = zeta^targets[i].

    zeta is a fixed primitive p^level-th root of unity, so the condition reads
    <c, basis[i]> = targets[i] mod p^level on exponent vectors c.
    """

    p: int
    level: int
    d: int
    basis: tuple[Vector, ...]
    targets: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.basis) != len(self.targets):
            raise FlatError("A flat needs one target per basis row.")
        if any(len(row) != self.d for row in self.basis):
            raise FlatError(f"Flat basis rows must have length {self.d}.")
        if self.basis and self.level > 0:
            form = smith_form([list(row) for row in self.basis])
            if form.rank < len(self.basis) or any(
                e % self.p == 0 for e in form.divisors
            ):
                raise FlatError(
                    f"Rows {self.basis} cannot be extended to a basis of Gamma."
                )

    @property
    def codimension(self) -> int:
        return len(self.basis)

    @property
    def size(self) -> int:
        return int(self.p ** (self.level * (self.d - self.codimension)))

    def contains(self, omega: Character) -> bool:
        modulus = self.p**self.level
        return all(
            sum(c * b for c, b in zip(omega.exponents, row)) % modulus == t
            for row, t in zip(self.basis, self.targets)
        )

    def characters(self) -> list[Character]:
        return [
            omega
            for omega in enumerate_characters(self.p, self.d, self.level)
            if self.contains(omega)
        ]

    def __str__(self) -> str:
        if not self.basis:
            return "all characters"
        return ", ".join(
            f"omega(g^{list(row)}) = zeta^{t}"
            for row, t in zip(self.basis, self.targets)
        )


@dataclass(frozen=True)
class ZeroSetReport:
    p: int
    d: int
    level: int
    zeros: tuple[Character, ...]
    cover: tuple[FlatLevel, ...]
    residual: tuple[Character, ...]
    exact: bool = True
    galois_closed: bool = True

    @property
    def complete(self) -> bool:
        return not self.residual

    def codimensions(self) -> list[int]:
        return [flat.codimension for flat in self.cover]


def _directions(
    p: int, d: int, level: int, rank: int
) -> Iterator[tuple[tuple[int, ...], tuple[Vector, ...]]]:
    """
    Generators of the free rank ``rank`` summands of (Z/p^level)^d.

    Each summand is produced once, as the columns of a matrix equal to the
    identity on a set of pivot rows, pivots in lexicographic order.
    """
    modulus = p**level
    seen: set[frozenset[Vector]] = set()
    for pivots in itertools.combinations(range(d), rank):
        free = [i for i in range(d) if i not in pivots]
        for entries in itertools.product(range(modulus), repeat=len(free) * rank):
            columns = []
            for j, pivot in enumerate(pivots):
                column = [0] * d
                column[pivot] = 1
                for position, i in enumerate(free):
                    column[i] = entries[position * rank + j]
                columns.append(tuple(column))
            span = frozenset(_span(columns, d, modulus))
            if span not in seen:
                seen.add(span)
                yield pivots, tuple(columns)


def _span(columns: Sequence[Vector], d: int, modulus: int) -> Iterator[Vector]:
    for scalars in itertools.product(range(modulus), repeat=len(columns)):
        yield tuple(
            sum(s * column[i] for s, column in zip(scalars, columns)) % modulus
            for i in range(d)
        )


def _annihilator(
    pivots: Sequence[int], columns: Sequence[Vector], d: int, modulus: int
) -> list[Vector]:
    """Rows b with <b, column> = 0 for every column, from the pivot shape."""
    rows = []
    for i in range(d):
        if i in pivots:
            continue
        row = [0] * d
        row[i] = 1
        for pivot, column in zip(pivots, columns):
            row[pivot] = -column[i] % modulus
        rows.append(tuple(row))
    return rows


def _flat(
    p: int,
    d: int,
    level: int,
    pivots: Sequence[int],
    columns: Sequence[Vector],
    base: Character,
) -> FlatLevel:
    modulus = p**level
    basis = _annihilator(pivots, columns, d, modulus)
    targets = tuple(
        sum(c * b for c, b in zip(base.exponents, row)) % modulus for row in basis
    )
    return FlatLevel(p, level, d, tuple(basis), targets)


def detect_flats(
    zeros: Sequence[Character],
    p: int,
    d: int,
    level: int,
    max_codimension: int | None = None,
) -> ZeroSetReport:
    """
    Cover a zero set by cosets of free summands, largest summands first.

    The cover is greedy: for each summand in lexicographic order, every zero
    not yet covered is tried as a base point. Flats may overlap. Only flats
    of codimension at most ``max_codimension`` are used; zeros left over are
    the residual. Gamma_0 is trivial, so at level 0 a nonempty zero set is
    the single flat of codimension zero.
    """
    if level < 0:
        raise FlatError(f"Level {level} is negative.")
    if level == 0:
        cover = (FlatLevel(p, 0, d, (), ()),) if zeros else ()
        return ZeroSetReport(p, d, 0, tuple(zeros), cover, ())
    modulus = p**level
    limit = d if max_codimension is None else max_codimension
    zero_set = {omega.exponents for omega in zeros}
    ordered = sorted(zeros)
    covered: set[Vector] = set()
    cover = []

    for codimension in range(0, min(limit, d) + 1):
        rank = d - codimension
        if p ** (level * rank) > len(zero_set):
            continue
        for pivots, columns in _directions(p, d, level, rank):
            span = list(_span(columns, d, modulus))
            for base in ordered:
                if base.exponents in covered:
                    continue
                coset = [
                    tuple((c + s) % modulus for c, s in zip(base.exponents, shift))
                    for shift in span
                ]
                if all(c in zero_set for c in coset):
                    flat = _flat(p, d, level, pivots, columns, base)
                    logger.debug("Flat of codimension %s: %s", codimension, flat)
                    cover.append(flat)
                    covered.update(coset)

    residual = tuple(omega for omega in ordered if omega.exponents not in covered)
    closed = all(
        conjugate.exponents in zero_set
        for omega in ordered
        for conjugate in galois_orbit(omega)
    )
    if not closed:
        logger.warning("Zero set at level %s is not closed under Galois", level)
    return ZeroSetReport(
        p, d, level, tuple(ordered), tuple(cover), residual, True, closed
    )


def zero_set_report(
    xi: AlgebraElement,
    p: int,
    level: int,
    budget: int = DEFAULT_BUDGET,
    jobs: int = 1,
) -> ZeroSetReport:
    zeros = zero_set_level(xi, p, level, budget, jobs)
    return detect_flats(zeros, p, xi.d, level)


@dataclass(frozen=True)
class NSVerdict:
    verdict: NSVerdictName
    level: int
    report: ZeroSetReport
    flat: FlatLevel | None = None

    def describe(self) -> str:
        if self.verdict == "holds":
            return (
                f"no codimension one flat at level {self.level}: the zero set is "
                "covered by flats of codimension at least 2"
            )
        if self.verdict == "violated":
            return (
                f"violated at level {self.level} by the flat {self.flat} "
                "(necessary, not sufficient, for a simple divisor)"
            )
        return (
            f"undetermined at level {self.level}: "
            f"{len(self.report.residual)} zeros are not covered by flats"
        )


def ns_hypothesis_level(
    xi: AlgebraElement,
    p: int,
    level: int,
    budget: int = DEFAULT_BUDGET,
    jobs: int = 1,
) -> NSVerdict:
    """
    Look for a codimension one flat of zeros of ``xi`` at one finite level.

    A flat of codimension zero contains codimension one flats and counts as a
    violation too.
    """
    if level < 1:
        raise FlatError("The hypothesis is checked at level 1 or deeper.")
    report = zero_set_report(xi, p, level, budget, jobs)
    for flat in report.cover:
        if flat.codimension <= 1:
            return NSVerdict("violated", level, report, flat)
    if not report.complete:
        return NSVerdict("undetermined", level, report)
    return NSVerdict("holds", level, report)
