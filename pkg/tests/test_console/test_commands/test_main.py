from __future__ import annotations

import pytest

from click.testing import CliRunner

from iwalab import __app_name__
from iwalab import __version__
from tests.conftest import pytest_regex


runner = CliRunner()


@pytest.mark.functional
def test_iwalab_version(cli):
    result = runner.invoke(cli, ["--version"])

    expected = f"{__app_name__}, version {__version__}\n"
    assert expected == result.stdout


@pytest.mark.functional
def test_iwalab_help_lists_every_command(cli):
    result = runner.invoke(cli, ["--help"])

    assert result.exit_code == 0
    assert pytest_regex(r"^Usage: iwalab \[OPTIONS\] COMMAND") == result.output
    for command in [
        "char-ideal",
        "config",
        "fourier-check",
        "funeq",
        "growth",
        "ns-check",
        "split",
        "synthesize",
        "twist",
        "validate",
        "zero-set",
    ]:
        assert f"  {command} " in result.output


@pytest.mark.functional
def test_iwalab_unknown_command(cli):
    result = runner.invoke(cli, ["frobenius"])

    assert result.exit_code == 2
    assert "No such command 'frobenius'" in result.output
