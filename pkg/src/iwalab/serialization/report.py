from __future__ import annotations

import datetime
import json

from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction
from typing import Any
from typing import Mapping
from typing import Optional

from iwalab import __version__
from iwalab.serialization.codec import format_rational
from iwalab.systems.report import CheckResult


def canonical(value: Any) -> Any:
    """Plain JSON values: rationals as "num/den", tuples as lists."""
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, Mapping):
        return {str(k): canonical(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [canonical(v) for v in value]
    if hasattr(value, "item") and not isinstance(value, (str, bytes)):
        return value.item()
    return value


@dataclass(frozen=True)
class Timing:
    started: datetime.datetime
    elapsed: float

    def to_dict(self) -> dict[str, Any]:
        return {
            "started": self.started.isoformat(),
            "elapsed": round(self.elapsed, 6),
        }


@dataclass(frozen=True)
class ReportDocument:
    """
    The outcome of one command.

    The canonical form is byte-for-byte deterministic; ``timing`` is only
    present when asked for.
    """

    command: str
    config: Mapping[str, Any]
    checks: tuple[CheckResult, ...] = ()
    results: Mapping[str, Any] = field(default_factory=dict)
    timing: Optional[Timing] = None

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def failures(self) -> list[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def with_timing(self, timing: Timing) -> ReportDocument:
        return ReportDocument(
            self.command, self.config, self.checks, self.results, timing
        )

    def to_dict(self) -> dict[str, Any]:
        document: dict[str, Any] = {
            "command": self.command,
            "version": __version__,
            "config": canonical(self.config),
            "passed": self.passed,
            "checks": [
                {
                    "axiom": check.axiom,
                    "name": check.name,
                    "location": check.location,
                    "passed": check.passed,
                    "witness": check.witness,
                }
                for check in self.checks
            ],
            "results": canonical(self.results),
        }
        if self.timing is not None:
            document["timing"] = self.timing.to_dict()
        return document

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=False)
