from __future__ import annotations

import click

from iwalab.termui import formatter
from iwalab.termui import style
from iwalab.termui.components import UIComponent
from iwalab.termui.markup import markup


def echo(text: str | UIComponent, nl: bool = True, err: bool = False) -> None:
    if isinstance(text, UIComponent):
        text = text.resolve()
    click.echo(markup.resolve(text), nl=nl, err=err)


def raw(text: str) -> None:
    """Print without markup, for machine-readable output."""
    click.echo(text)


def banner(text: str) -> None:
    echo(f"[{style.BANNER}]> {text}[/]")


def config(config: dict[str, str]) -> None:
    echo(formatter.config(config))
