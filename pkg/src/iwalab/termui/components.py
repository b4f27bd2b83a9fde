from __future__ import annotations

from abc import ABC
from abc import abstractmethod
from typing import Any
from typing import Mapping
from typing import Sequence

from iwalab.systems.report import CheckResult
from iwalab.termui import formatter
from iwalab.termui import icons
from iwalab.termui import style
from iwalab.termui.markup import markup


class UIComponent(ABC):
    """
    Base class of UIComponent all components must inherit from it.

    An UIComponent is a formatter with much more complex logic.
    """

    @abstractmethod
    def resolve(self) -> str:
        raise NotImplementedError


class CheckTable(UIComponent):
    def __init__(self, checks: Sequence[CheckResult]) -> None:
        self._checks = checks
        self._headers = ["", "axiom", "check", "at", "witness"]
        self._columns: list[list[str]] = [[h] for h in self._headers]

    def _add_cells(self, *values: str) -> None:
        for i, value in enumerate(values):
            self._columns[i].append(value)

    def resolve(self) -> str:
        if not self._checks:
            return "No checks."
        for check in self._checks:
            self._add_cells(
                formatter.verdict(check.passed),
                check.axiom,
                check.name,
                check.location,
                formatter.witness(check.witness),
            )

        def col_len(text: str) -> int:
            return len(markup.remove(text))

        widths = [max(col_len(cell) for cell in col) for col in self._columns]
        separator = "-".join([(width + 2) * "-" for width in widths])

        rows = []
        for row in zip(*self._columns):
            cells = [
                f" {cell}{(width - col_len(cell)) * ' '} "
                for cell, width in zip(row, widths)
            ]
            rows.append(f" {' '.join(cells)}".rstrip())
            if len(rows) == 1:
                rows.append(f" {separator}")
        return "\n".join(rows)


class KeyValueBlock(UIComponent):
    def __init__(self, values: Mapping[str, Any]) -> None:
        self._values = values

    def resolve(self) -> str:
        bullet = f" [{style.INFO}]{icons.LIST}[/] "
        return "\n".join(
            f"{bullet}[{style.HEADER}]{key}[/]: {formatter.value(value)}"
            for key, value in self._values.items()
        )


class Notification(UIComponent):
    level = "unknown"

    def __init__(self, text: str):
        self._text = text

    def resolve(self) -> str:
        color, icon = {
            "success": (style.SUCCESS, icons.SUCCESS),
            "info": (style.INFO, icons.INFO),
            "warning": (style.WARNING, icons.WARNING),
            "error": (style.ERROR, icons.ERROR),
        }.get(self.level, (style.DEFAULT, icons.NOTIFICATION))
        prefix = f"[{color}]{icon}({self.level})[/]"

        return f"{prefix} {self._text}"


class SuccessNotification(Notification):
    level = "success"


class InfoNotification(Notification):
    level = "info"


class WarningNotification(Notification):
    level = "warning"


class ErrorNotification(Notification):
    level = "error"
