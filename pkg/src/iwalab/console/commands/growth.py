from __future__ import annotations

from typing import Any

import click

from iwalab.console.commands._execute import execute
from iwalab.console.core.parameters import document_argument
from iwalab.console.core.parameters import runtime
from iwalab.console.core.parameters import runtime_options


@click.command(help="Z-ranks of the finite level quotients of an element")
@document_argument
@click.option("--levels", type=click.IntRange(min=0), help="Top level N")
@runtime_options
def growth(document: str, levels: int | None, **options: Any) -> None:
    execute("growth", document, {"levels": levels}, runtime(options))
