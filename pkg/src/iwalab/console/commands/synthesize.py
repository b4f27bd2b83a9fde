from __future__ import annotations

from typing import Any

import click

from iwalab.console.commands._execute import execute
from iwalab.console.core.parameters import document_argument
from iwalab.console.core.parameters import runtime
from iwalab.console.core.parameters import runtime_options


@click.command(help="Build the Gamma-system of finite quotients of a module")
@document_argument
@click.option("--levels", type=click.IntRange(min=0), help="Top level N")
@click.option(
    "--mode",
    type=click.Choice(["full", "torsion"]),
    help="Whole quotients, or their p-power torsion",
)
@click.option(
    "--out",
    type=click.Path(dir_okay=False, writable=True, path_type=str),
    help="Write the system document to this file",
)
@runtime_options
def synthesize(
    document: str,
    levels: int | None,
    mode: str | None,
    out: str | None,
    **options: Any,
) -> None:
    flags = {"levels": levels, "mode": mode, "out": out}
    execute("synthesize", document, flags, runtime(options))
