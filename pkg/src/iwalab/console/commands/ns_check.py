from __future__ import annotations

from typing import Any

import click

from iwalab.console.commands._execute import execute
from iwalab.console.core.parameters import document_argument
from iwalab.console.core.parameters import runtime
from iwalab.console.core.parameters import runtime_options


@click.command("ns-check", help="Look for a codimension one flat of zeros")
@document_argument
@click.option("--level", type=click.IntRange(min=1), help="Level n")
@runtime_options
def ns_check(document: str, level: int | None, **options: Any) -> None:
    execute("ns-check", document, {"level": level}, runtime(options))
