from __future__ import annotations

import json

from dataclasses import dataclass
from dataclasses import field
from pathlib import Path
from typing import Any
from typing import Mapping
from typing import Optional

from iwalab.algebra.element import AlgebraElement
from iwalab.algebra.types import GammaSpec
from iwalab.algebra.types import PrimeConfig
from iwalab.ideals.elementary import ElementaryModule
from iwalab.serialization.codec import integer
from iwalab.serialization.codec import located
from iwalab.serialization.codec import mapping
from iwalab.serialization.codec import parse_element
from iwalab.serialization.codec import parse_elementary
from iwalab.serialization.codec import parse_system
from iwalab.serialization.codec import sequence
from iwalab.serialization.exceptions import SchemaError
from iwalab.systems.system import GammaSystem


MODES = ("full", "torsion")

# Level-valued flags, checked against the header.
LEVEL_FLAGS = ("level", "levels")


@dataclass(frozen=True)
class JobSpec:
    command: str
    prime: PrimeConfig
    gamma: GammaSpec
    levels: int
    mode: str = "full"
    module: Optional[ElementaryModule] = None
    tags: Mapping[int, str] = field(default_factory=dict)
    element: Optional[AlgebraElement] = None
    elements: tuple[AlgebraElement, ...] = ()
    system: Optional[GammaSystem] = None
    flags: Mapping[str, Any] = field(default_factory=dict)

    @property
    def p(self) -> int:
        return self.prime.p

    @property
    def d(self) -> int:
        return self.gamma.d

    def header(self) -> dict[str, Any]:
        return {
            "p": self.p,
            "d": self.d,
            "precision": self.prime.precision,
            "levels": self.levels,
        }


def load_document(path: str | Path) -> Any:
    path = Path(path)
    try:
        with path.open() as file:
            return json.load(file)
    except OSError as error:
        raise SchemaError(str(path), f"cannot read the file ({error.strerror})")
    except json.JSONDecodeError as error:
        raise SchemaError(
            str(path), f"not a JSON document (line {error.lineno}: {error.msg})"
        )


def _header(document: dict[str, Any]) -> tuple[PrimeConfig, GammaSpec, int]:
    header = mapping(document.get("header", document), "header")
    for key in ("p", "d", "precision", "levels"):
        if key not in header:
            raise SchemaError(f"header.{key}", "missing field")
    p = integer(header["p"], "header.p", 2)
    d = integer(header["d"], "header.d", 1)
    precision = integer(header["precision"], "header.precision", 1)
    levels = integer(header["levels"], "header.levels", 0)
    labels = tuple(
        str(label)
        for label in sequence(header.get("labels", []), "header.labels")
    )
    with located("header"):
        return PrimeConfig(p, precision), GammaSpec(d, labels), levels


def parse_spec(
    document: Any, command: str, flags: Mapping[str, Any] | None = None
) -> JobSpec:
    """
    Validate a description document for ``command``.

    Schema violations raise ``SchemaError`` naming the offending field.
    """
    flags = dict(flags or {})
    document = mapping(document, "document")
    prime, gamma, levels = _header(document)
    p, d = prime.p, gamma.d

    for name in LEVEL_FLAGS:
        value = flags.get(name)
        if value is not None and not 0 <= value <= levels:
            raise SchemaError(
                f"--{name}", f"level {value} is outside 0..{levels} of the header"
            )

    mode = flags.get("mode") or document.get("mode", "full")
    if mode not in MODES:
        raise SchemaError("mode", f"expected one of {', '.join(MODES)}, got {mode!r}")

    module, tags = None, {}
    if "module" in document:
        module, tags = parse_elementary(document["module"], d, p, "module")
    element = None
    if "element" in document:
        element = parse_element(document["element"], d, p, "element")
    elements = tuple(
        parse_element(x, d, p, f"elements[{i}]")
        for i, x in enumerate(sequence(document.get("elements", []), "elements"))
    )
    system = None
    if "system" in document:
        system = parse_system(document["system"], prime, gamma, "system")
        if system.max_level > levels:
            raise SchemaError(
                "system.levels",
                f"{system.max_level + 1} levels given, the header allows {levels + 1}",
            )

    return JobSpec(
        command=command,
        prime=prime,
        gamma=gamma,
        levels=levels,
        mode=mode,
        module=module,
        tags=tags,
        element=element,
        elements=elements,
        system=system,
        flags=flags,
    )
