from __future__ import annotations

from typing import Any

import click

from iwalab.console.commands._execute import execute
from iwalab.console.core.parameters import document_argument
from iwalab.console.core.parameters import runtime
from iwalab.console.core.parameters import runtime_options


@click.command("zero-set", help="Characters of one level killing an element")
@document_argument
@click.option("--level", type=click.IntRange(min=0), help="Level n")
@click.option("--flats", is_flag=True, help="Cover the zero set by flats")
@runtime_options
def zero_set(document: str, level: int | None, flats: bool, **options: Any) -> None:
    flags = {"level": level, "flats": flats}
    execute("zero-set", document, flags, runtime(options))
