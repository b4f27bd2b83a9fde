from __future__ import annotations

import re

from typing import Any
from typing import ClassVar
from typing import Match

import click

from iwalab.termui.exceptions import TermUIError


class Markup:
    """
    Console styles written inline: "[bold red]text[/]".

    Markup does not nest. Colors are the sixteen basic ANSI names plus the
    few 256-color entries the styles of this package use.
    """

    _text_styles: ClassVar[frozenset[str]] = frozenset(
        {"bold", "dim", "underline", "italic", "reverse", "strikethrough"}
    )
    _basic = ("black", "red", "green", "yellow", "blue", "magenta", "cyan", "white")
    _ansi_colors: ClassVar[dict[str, str | int]] = {
        **{name: name for name in _basic},
        **{f"bright_{name}": f"bright_{name}" for name in _basic},
        "chartreuse3": 76,
        "steel_blue1": 81,
        "orange1": 214,
        "khaki1": 228,
    }
    _re_markup = re.compile(r"(\[(?P<style>[a-z][^[]*?)](?P<text>.[^[]*|.*)(\[/]))")

    def _resolve_style(self, style: str) -> dict[str, Any]:
        tags: dict[str, Any] = {}
        for tag in style.split():
            if tag in self._text_styles:
                tags[tag] = True
            elif tag in self._ansi_colors:
                tags["fg"] = self._ansi_colors[tag]
            else:
                raise TermUIError(f"Unknown markup tag {tag}.")
        return tags

    def _styled(self, match: Match[str]) -> str:
        tags = self._resolve_style(match.group("style"))
        return click.style(text=self.resolve(match.group("text")), **tags)

    def _plain(self, match: Match[str]) -> str:
        return self.remove(match.group("text"))

    def resolve(self, text: str) -> str:
        return re.sub(self._re_markup, self._styled, text)

    def remove(self, text: str) -> str:
        return re.sub(self._re_markup, self._plain, text)


markup = Markup()
