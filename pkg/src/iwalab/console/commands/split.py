from __future__ import annotations

from typing import Any

import click

from iwalab.console.commands._execute import execute
from iwalab.console.core.parameters import document_argument
from iwalab.console.core.parameters import runtime
from iwalab.console.core.parameters import runtime_options


@click.command(help="Split an elementary module")
@document_argument
@click.option(
    "--by",
    type=click.Choice(["simple", "p"]),
    default="simple",
    show_default=True,
    help="Simple factors apart, or the p-part apart",
)
@runtime_options
def split(document: str, by: str, **options: Any) -> None:
    execute("split", document, {"by": by}, runtime(options))
