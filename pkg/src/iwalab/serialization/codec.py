from __future__ import annotations

import contextlib

from fractions import Fraction
from typing import Any
from typing import Generator
from typing import Sequence

from iwalab.algebra.cyclotomic import CyclotomicInt
from iwalab.algebra.element import AlgebraElement
from iwalab.algebra.element import Coefficient
from iwalab.algebra.types import INTEGER
from iwalab.algebra.types import CoefficientRing
from iwalab.algebra.types import GammaSpec
from iwalab.algebra.types import PrimeConfig
from iwalab.exceptions import IwalabError
from iwalab.ideals.elementary import ElementaryModule
from iwalab.ideals.elementary import Factor
from iwalab.modules.module import FiniteModule
from iwalab.modules.module import ModuleMap
from iwalab.modules.module import from_presentation
from iwalab.modules.pairing import PairingMatrix
from iwalab.modules.pairing import rational_matrix
from iwalab.modules.smith import IntMatrix
from iwalab.modules.smith import as_matrix
from iwalab.serialization.exceptions import SchemaError
from iwalab.systems.system import MAP_NAMES
from iwalab.systems.system import GammaSystem
from iwalab.systems.system import SystemLevel
from iwalab.systems.system import Transition


Document = Any


@contextlib.contextmanager
def located(path: str) -> Generator[None, None, None]:
    """Report library errors raised while building an object at ``path``."""
    try:
        yield
    except SchemaError:
        raise
    except IwalabError as error:
        raise SchemaError(path, error.message) from error


def integer(value: Document, path: str, minimum: int | None = None) -> int:
    if isinstance(value, bool):
        raise SchemaError(path, f"expected an integer, got {value!r}")
    if isinstance(value, str):
        try:
            value = int(value)
        except ValueError:
            raise SchemaError(path, f"expected an integer, got {value!r}")
    if not isinstance(value, int):
        raise SchemaError(path, f"expected an integer, got {value!r}")
    if minimum is not None and value < minimum:
        raise SchemaError(path, f"expected an integer >= {minimum}, got {value}")
    return value


def rational(value: Document, path: str) -> Fraction:
    if isinstance(value, str):
        try:
            return Fraction(value)
        except ValueError:
            raise SchemaError(path, f"expected a rational 'num/den', got {value!r}")
    return Fraction(integer(value, path))


def format_rational(value: Fraction | int) -> str:
    return str(Fraction(value))


def sequence(value: Document, path: str, length: int | None = None) -> list[Any]:
    if not isinstance(value, list):
        raise SchemaError(path, f"expected a list, got {type(value).__name__}")
    if length is not None and len(value) != length:
        raise SchemaError(path, f"expected {length} entries, got {len(value)}")
    return value


def mapping(value: Document, path: str) -> dict[str, Any]:
    if not isinstance(value, dict):
        raise SchemaError(path, f"expected an object, got {type(value).__name__}")
    return value


def field(document: dict[str, Any], key: str, path: str) -> Any:
    if key not in document:
        raise SchemaError(f"{path}.{key}", "missing field")
    return document[key]


def parse_coefficient(value: Document, p: int, path: str) -> Coefficient:
    if isinstance(value, list):
        order, coefficients = sequence(value, path, 2)
        order = integer(order, f"{path}[0]", 0)
        values = [
            rational(c, f"{path}[1][{i}]")
            for i, c in enumerate(sequence(coefficients, f"{path}[1]"))
        ]
        with located(path):
            return CyclotomicInt(p, order, tuple(values))
    return integer(value, path)


def parse_element(data: Document, d: int, p: int, path: str) -> AlgebraElement:
    """``[[coefficient, [e_1, ..., e_d]], ...]``"""
    terms = []
    for i, term in enumerate(sequence(data, path)):
        term_path = f"{path}[{i}]"
        coefficient, exponents = sequence(term, term_path, 2)
        key = tuple(
            integer(e, f"{term_path}[1][{j}]")
            for j, e in enumerate(sequence(exponents, f"{term_path}[1]", d))
        )
        terms.append((key, parse_coefficient(coefficient, p, f"{term_path}[0]")))

    orders = [c.order for _, c in terms if isinstance(c, CyclotomicInt)]
    ring = CoefficientRing.cyclotomic(p, max(orders)) if orders else INTEGER
    with located(path):
        return AlgebraElement(d, tuple(terms), ring)


def dump_coefficient(value: Coefficient) -> Document:
    if isinstance(value, CyclotomicInt):
        return [value.order, [_plain(c) for c in value.coefficients]]
    return int(value)


def _plain(value: Fraction) -> int | str:
    return value.numerator if value.denominator == 1 else format_rational(value)


def dump_element(x: AlgebraElement) -> Document:
    return [[dump_coefficient(c), list(key)] for key, c in x.terms]


def parse_elementary(
    data: Document, d: int, p: int, path: str
) -> tuple[ElementaryModule, dict[int, str]]:
    """The factors of an elementary module, with the optional factor tags."""
    document = mapping(data, path)
    factors, tags = [], {}
    for i, entry in enumerate(sequence(field(document, "factors", path), path)):
        entry_path = f"{path}.factors[{i}]"
        entry = mapping(entry, entry_path)
        xi = parse_element(field(entry, "xi", entry_path), d, p, f"{entry_path}.xi")
        r = integer(field(entry, "r", entry_path), f"{entry_path}.r", 1)
        factors.append(Factor(xi, r))
        if "tag" in entry:
            tag = entry["tag"]
            if tag not in ("simple", "simploid", "other"):
                raise SchemaError(f"{entry_path}.tag", f"unknown tag {tag!r}")
            tags[i] = tag
    with located(path):
        return ElementaryModule(tuple(factors)), tags


def dump_elementary(module: ElementaryModule) -> Document:
    return {
        "factors": [{"xi": dump_element(xi), "r": r} for xi, r in module.factors]
    }


def _matrix(
    data: Document, rows: int | None, columns: int, path: str
) -> list[list[int]]:
    return [
        [
            integer(value, f"{path}[{i}][{j}]")
            for j, value in enumerate(sequence(row, f"{path}[{i}]", columns))
        ]
        for i, row in enumerate(sequence(data, path, rows))
    ]


def parse_module(data: Document, p: int, d: int, path: str) -> FiniteModule:
    """
    ``{"level", "divisors", "actions"}`` in Smith coordinates, or
    ``{"level", "rank", "relations", "actions"}`` normalized on reading.
    """
    document = mapping(data, path)
    level = integer(field(document, "level", path), f"{path}.level", 0)
    if "divisors" in document:
        divisors = [
            integer(e, f"{path}.divisors[{i}]", 2)
            for i, e in enumerate(sequence(document["divisors"], f"{path}.divisors"))
        ]
        rank = len(divisors)
    else:
        rank = integer(field(document, "rank", path), f"{path}.rank", 0)
    actions = [
        _matrix(action, rank, rank, f"{path}.actions[{i}]")
        for i, action in enumerate(
            sequence(field(document, "actions", path), f"{path}.actions", d)
        )
    ]
    with located(path):
        if "divisors" in document:
            return FiniteModule(p, level, tuple(divisors), tuple(actions))
        relations_path = f"{path}.relations"
        rows = _matrix(field(document, "relations", path), None, rank, relations_path)
        relations = as_matrix(rows, columns=rank)
        matrices = [as_matrix(a, columns=rank) for a in actions]
        presentation = from_presentation(p, level, relations, matrices)
        return presentation.module


def _ints(matrix: IntMatrix) -> list[list[int]]:
    return [[int(v) for v in row] for row in matrix.tolist()]


def dump_module(module: FiniteModule) -> Document:
    return {
        "level": module.level,
        "divisors": list(module.divisors),
        "actions": [_ints(action) for action in module.actions],
    }


def parse_map(
    data: Document, source: FiniteModule, target: FiniteModule, path: str
) -> ModuleMap:
    matrix = _matrix(data, target.rank, source.rank, path)
    with located(path):
        return ModuleMap(source, target, as_matrix(matrix))


def parse_pairing(
    data: Document, left: FiniteModule, right: FiniteModule, path: str
) -> PairingMatrix:
    values = [
        [
            rational(v, f"{path}[{i}][{j}]")
            for j, v in enumerate(sequence(row, f"{path}[{i}]", right.rank))
        ]
        for i, row in enumerate(sequence(data, path, left.rank))
    ]
    with located(path):
        matrix = rational_matrix(left.rank, right.rank, values)
        return PairingMatrix(left, right, matrix)


def dump_pairing(pairing: PairingMatrix) -> Document:
    return pairing.format_values()


def parse_system(
    data: Document, prime: PrimeConfig, gamma: GammaSpec, path: str
) -> GammaSystem:
    document = mapping(data, path)
    p, d = prime.p, gamma.d
    levels = []
    for i, entry in enumerate(sequence(field(document, "levels", path), path)):
        entry_path = f"{path}.levels[{i}]"
        entry = mapping(entry, entry_path)
        n = integer(field(entry, "level", entry_path), f"{entry_path}.level", 0)
        a = parse_module(field(entry, "a", entry_path), p, d, f"{entry_path}.a")
        b = parse_module(field(entry, "b", entry_path), p, d, f"{entry_path}.b")
        pairing = parse_pairing(
            field(entry, "pairing", entry_path), a, b, f"{entry_path}.pairing"
        )
        levels.append(SystemLevel(n, a, b, pairing))

    transitions = []
    for i, entry in enumerate(
        sequence(document.get("transitions", []), f"{path}.transitions")
    ):
        entry_path = f"{path}.transitions[{i}]"
        entry = mapping(entry, entry_path)
        m = integer(field(entry, "m", entry_path), f"{entry_path}.m", 0)
        n = integer(field(entry, "n", entry_path), f"{entry_path}.n", 0)
        if not m <= n < len(levels):
            raise SchemaError(entry_path, f"levels {m}->{n} are not in the system")
        low, high = levels[m], levels[n]
        maps = {
            "r_a": (low.a, high.a),
            "r_b": (low.b, high.b),
            "k_a": (high.a, low.a),
            "k_b": (high.b, low.b),
        }
        parsed = {
            name: parse_map(
                field(entry, name, entry_path), *maps[name], f"{entry_path}.{name}"
            )
            for name in MAP_NAMES
        }
        transitions.append(Transition(m, n, **parsed))

    with located(path):
        return GammaSystem(prime, gamma, tuple(levels), tuple(transitions))


def dump_system(system: GammaSystem) -> Document:
    return {
        "levels": [
            {
                "level": level.level,
                "a": dump_module(level.a),
                "b": dump_module(level.b),
                "pairing": dump_pairing(level.pairing),
            }
            for level in system.levels
        ],
        "transitions": [
            {
                "m": t.m,
                "n": t.n,
                **{name: _ints(t.get(name).matrix) for name in MAP_NAMES},
            }
            for t in system.transitions
        ],
    }


def dump_characters(characters: Sequence[Any]) -> Document:
    return [list(omega.exponents) for omega in characters]
