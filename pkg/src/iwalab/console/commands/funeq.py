from __future__ import annotations

from typing import Any

import click

from iwalab.console.commands._execute import execute
from iwalab.console.core.parameters import document_argument
from iwalab.console.core.parameters import runtime
from iwalab.console.core.parameters import runtime_options


@click.command(help="Compare a_n with the sharp of b_n at every level")
@document_argument
@click.option(
    "--mode",
    type=click.Choice(["full", "torsion"]),
    help="Synthesis mode when the document gives a module",
)
@click.option(
    "--node-budget",
    type=click.IntRange(min=1),
    help="Search nodes per equivariant isomorphism",
)
@runtime_options
def funeq(
    document: str, mode: str | None, node_budget: int | None, **options: Any
) -> None:
    overrides = {**runtime(options), "node_budget": node_budget}
    execute("funeq", document, {"mode": mode}, overrides)
