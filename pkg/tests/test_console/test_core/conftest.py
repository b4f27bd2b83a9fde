from __future__ import annotations

import click
import pytest

from iwalab.console.core.group import AliasGroup
from iwalab.exceptions import IwalabError


@pytest.fixture(scope="session")
def iwalab_test_group():
    @click.group(cls=AliasGroup, invoke_without_command=True)
    @click.pass_context
    def test_cli(ctx):
        if not ctx.invoked_subcommand:
            raise IwalabError("Test group error")

    @test_cli.command("zero-set")
    def zero_set():
        click.echo("zero-set")

    @test_cli.command()
    @click.argument("n", type=int)
    @click.option("--flats", is_flag=True)
    def level(n, flats):
        click.echo(f"level={n} flats={flats}")

    return test_cli
