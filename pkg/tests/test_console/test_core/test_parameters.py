from __future__ import annotations

import re

import click
import pytest

from click.testing import CliRunner

from iwalab.console.core.parameters import NotRequired
from iwalab.console.core.parameters import document_argument
from iwalab.console.core.parameters import runtime
from iwalab.console.core.parameters import runtime_options
from tests.conftest import pytest_regex


runner = CliRunner()


def test_click_option_not_required_params():
    @click.command()
    @click.option("--foo", is_flag=True, cls=NotRequired, not_required=["bar"])
    @click.option("--bar", is_flag=True, cls=NotRequired, not_required=["foo"])
    def dummy(foo, bar):
        click.echo("test")

    try1 = runner.invoke(dummy, ["--foo", "--bar"])
    try2 = runner.invoke(dummy, ["--foo"])
    try3 = runner.invoke(dummy, ["--bar"])

    expected = pytest_regex(
        r"^(.*)Unnecessary option 'bar' provided(.*)$",
        flags=re.MULTILINE,
    )
    assert expected == try1.stdout
    assert try2.output == "test\n"
    assert try3.output == "test\n"


def test_runtime_options_are_collected():
    @click.command()
    @document_argument
    @runtime_options
    def dummy(document, **options):
        click.echo(f"{document} {sorted(runtime(options).items())} {options}")

    result = runner.invoke(dummy, ["job.json", "--budget", "81", "--json"])

    expected = (
        "job.json [('budget', 81), ('jobs', None), ('json', True), "
        "('precision', None), ('timing', False)] {}\n"
    )
    assert result.output == expected


@pytest.mark.parametrize("option", ["--budget", "--precision", "--jobs"])
def test_runtime_options_must_be_positive(option):
    @click.command()
    @runtime_options
    def dummy(**options):
        click.echo("never")

    result = runner.invoke(dummy, [option, "0"])

    assert result.exit_code == 2
    assert "never" not in result.output
