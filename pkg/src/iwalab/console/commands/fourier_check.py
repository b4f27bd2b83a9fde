from __future__ import annotations

from typing import Any

import click

from iwalab.console.commands._execute import execute
from iwalab.console.core.parameters import document_argument
from iwalab.console.core.parameters import runtime
from iwalab.console.core.parameters import runtime_options


@click.command("fourier-check", help="Check the Fourier transform laws")
@document_argument
@click.option(
    "--samples",
    type=click.IntRange(min=1),
    default=100,
    show_default=True,
    help="Random functionals per level",
)
@click.option("--seed", type=int, default=0, show_default=True, help="Random seed")
@runtime_options
def fourier_check(document: str, samples: int, seed: int, **options: Any) -> None:
    flags = {"samples": samples, "seed": seed}
    execute("fourier-check", document, flags, runtime(options))
