from __future__ import annotations

from typing import Any

from iwalab.termui import icons
from iwalab.termui import style


def verdict(passed: bool | None) -> str:
    if passed is None:
        return f"[{style.UNKNOWN}]{icons.UNDETERMINED}[/]"
    if passed:
        return f"[{style.SUCCESS}]{icons.PASSED}[/]"
    return f"[{style.ERROR}]{icons.FAILED}[/]"


def witness(text: str | None) -> str:
    return f"[{style.WITNESS}]{text}[/]" if text else ""


def character(exponents: list[int]) -> str:
    return "(" + ", ".join(str(e) for e in exponents) + ")"


def value(value: Any) -> str:
    """A result value on one line."""
    if isinstance(value, bool):
        return "yes" if value else "no"
    if value is None:
        return "-"
    if isinstance(value, list) and all(isinstance(v, int) for v in value):
        return "[" + ", ".join(str(v) for v in value) + "]"
    if isinstance(value, list) and value and all(
        isinstance(v, list) and all(isinstance(e, int) for e in v) for v in value
    ):
        return " ".join(character(v) for v in value)
    if isinstance(value, list):
        return f"{len(value)} entries"
    if isinstance(value, dict) and any(
        isinstance(v, (list, dict)) for v in value.values()
    ):
        return f"{len(value)} fields"
    if isinstance(value, dict):
        return ", ".join(f"{k}={v}" for k, v in sorted(value.items()))
    return str(value)


def config(config: dict[str, str]) -> str:
    return "\n".join([f"[{style.INFO}]{k}[/] = {v}" for k, v in config.items()])
