from __future__ import annotations

from typing import Any

import click

from iwalab.console.commands._execute import execute
from iwalab.console.core.parameters import NotRequired
from iwalab.console.core.parameters import document_argument
from iwalab.console.core.parameters import runtime
from iwalab.console.core.parameters import runtime_options


@click.command(help="Twist by a unit character, given or searched for")
@document_argument
@click.option(
    "--phi",
    cls=NotRequired,
    not_required=["search"],
    metavar="u1,...,ud",
    help="Values of phi on the generators",
)
@click.option(
    "--search",
    cls=NotRequired,
    not_required=["phi"],
    is_flag=True,
    help="Search a twist without simple zeros",
)
@click.option(
    "--order",
    type=click.IntRange(min=1),
    default=1,
    show_default=True,
    help="Searched twists are 1 mod p^order",
)
@click.option("--levels", type=click.IntRange(min=0), help="Top level N")
@runtime_options
def twist(
    document: str,
    phi: str | None,
    search: bool,
    order: int,
    levels: int | None,
    **options: Any,
) -> None:
    flags = {"phi": phi, "search": search, "order": order, "levels": levels}
    execute("twist", document, flags, runtime(options))
