from __future__ import annotations

from iwalab.console.commands.char_ideal import char_ideal
from iwalab.console.commands.config import config
from iwalab.console.commands.fourier_check import fourier_check
from iwalab.console.commands.funeq import funeq
from iwalab.console.commands.growth import growth
from iwalab.console.commands.main import iwalab
from iwalab.console.commands.ns_check import ns_check
from iwalab.console.commands.split import split
from iwalab.console.commands.synthesize import synthesize
from iwalab.console.commands.twist import twist
from iwalab.console.commands.validate import validate
from iwalab.console.commands.zero_set import zero_set


__all__ = ["iwalab"]

iwalab.add_commands(
    [
        char_ideal,
        config,
        fourier_check,
        funeq,
        growth,
        ns_check,
        split,
        synthesize,
        twist,
        validate,
        zero_set,
    ]
)


def run() -> None:
    iwalab()
