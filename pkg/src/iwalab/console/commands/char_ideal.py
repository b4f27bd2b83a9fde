from __future__ import annotations

from typing import Any

import click

from iwalab.console.commands._execute import execute
from iwalab.console.core.parameters import document_argument
from iwalab.console.core.parameters import runtime
from iwalab.console.core.parameters import runtime_options


@click.command(
    "char-ideal", help="Characteristic ideal, its sharp and the level sizes"
)
@document_argument
@click.option("--levels", type=click.IntRange(min=0), help="Top level N")
@runtime_options
def char_ideal(document: str, levels: int | None, **options: Any) -> None:
    execute("char-ideal", document, {"levels": levels}, runtime(options))
