from __future__ import annotations

import click

from iwalab.console.core.parameters import NotRequired
from iwalab.services.session import get_current_session
from iwalab.termui import printer
from iwalab.termui.components import SuccessNotification


@click.command(help="Get and set options")
@click.argument("option", required=False, metavar="<option>", type=click.STRING)
@click.argument("value", required=False, metavar="<value>", type=click.STRING)
@click.option(
    "--unset",
    cls=NotRequired,
    not_required=["value", "list"],
    is_flag=True,
    help="Unset an option",
)
@click.option(
    "--list",
    cls=NotRequired,
    not_required=["option", "value", "unset"],
    is_flag=True,
    help="Show the whole config",
)
def config(option: str | None, value: str | None, list: bool, unset: bool) -> None:
    session = get_current_session()
    if list:
        printer.config(session.config.options)
        return
    if option is None:
        raise click.UsageError("Missing argument '<option>'.")

    if unset:
        del session.config[option]
    elif value is None:
        printer.echo(session.config[option])
        return
    else:
        session.config[option] = value

    session.config.save()
    printer.echo(SuccessNotification("Config updated"))
