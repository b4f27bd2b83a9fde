from __future__ import annotations

import pytest

from iwalab.termui import printer
from iwalab.termui.components import ErrorNotification
from iwalab.termui.components import SuccessNotification


@pytest.mark.parametrize(
    "inputs, expected",
    [
        ("[red bold]foo[/]bar", "foobar\n"),
        (SuccessNotification("foobar"), "✔(success) foobar\n"),
    ],
)
def test_echo(capsys, inputs, expected):
    printer.echo(inputs)

    captured = capsys.readouterr()
    assert captured.out == expected


def test_echo_to_stderr(capsys):
    printer.echo(ErrorNotification("broken"), err=True)

    captured = capsys.readouterr()
    assert captured.out == ""
    assert captured.err == "✘(error) broken\n"


def test_raw_keeps_brackets(capsys):
    printer.raw('{"zeros": [[0, 0]]}')

    captured = capsys.readouterr()
    assert captured.out == '{"zeros": [[0, 0]]}\n'


def test_banner(capsys):
    printer.banner("validate: p=3, d=1, levels=2")

    captured = capsys.readouterr()
    assert captured.out == "> validate: p=3, d=1, levels=2\n"


def test_config(capsys):
    config = {
        "core.budget": "729",
        "alias.v": "validate",
    }

    printer.config(config)

    expected = "core.budget = 729\nalias.v = validate\n"
    captured = capsys.readouterr()
    assert captured.out == expected
