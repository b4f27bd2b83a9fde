from __future__ import annotations

from typing import Any

import click

from iwalab.console.commands._execute import execute
from iwalab.console.core.parameters import document_argument
from iwalab.console.core.parameters import runtime
from iwalab.console.core.parameters import runtime_options


@click.command(help="Check the axioms of a Gamma-system")
@document_argument
@click.option(
    "--mode",
    type=click.Choice(["full", "torsion"]),
    help="Synthesis mode when the document gives a module",
)
@runtime_options
def validate(document: str, mode: str | None, **options: Any) -> None:
    execute("validate", document, {"mode": mode}, runtime(options))
