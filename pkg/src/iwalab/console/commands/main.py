from __future__ import annotations

import click

from iwalab import __app_name__
from iwalab import __version__
from iwalab.console.core.iwalab import iwalab_group
from iwalab.services.session import Session
from iwalab.utils import configure_logging


@iwalab_group(help="Exact computations with Iwasawa modules and Gamma-systems")
@click.option(
    "-v",
    "--verbose",
    count=True,
    help="Log more, repeat for debug records",
)
@click.version_option(
    version=__version__, prog_name=__app_name__, help="Show the version"
)
@click.pass_context
def iwalab(ctx: click.Context, verbose: int) -> None:
    configure_logging(verbose)
    session = Session.create()
    session.bind_context(ctx=ctx)
