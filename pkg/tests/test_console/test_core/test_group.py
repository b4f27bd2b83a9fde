from __future__ import annotations

from click.testing import CliRunner


runner = CliRunner()


def test_group_command_return_command_without_checking_for_alias(
    mocker, iwalab_test_group
):
    load = mocker.patch("iwalab.console.core.group.Config.load")

    result = runner.invoke(iwalab_test_group, ["zero-set"])

    assert result.output == "zero-set\n"
    load.assert_not_called()


def test_group_command_handle_alias(mocker, iwalab_test_group):
    config = {"alias.zs": "zero-set"}
    mocker.patch("iwalab.console.core.group.Config.load", return_value=config)

    result = runner.invoke(iwalab_test_group, ["zs"])

    assert result.output == "zero-set\n"


def test_group_unknown_command(mocker, iwalab_test_group):
    mocker.patch("iwalab.console.core.group.Config.load", return_value={})

    result = runner.invoke(iwalab_test_group, ["foo"])

    assert result.exit_code == 2
    assert "No such command 'foo'" in result.output


def test_group_alias_with_options(mocker, iwalab_test_group):
    config = {"alias.zl": "level --flats"}
    mocker.patch("iwalab.console.core.group.Config.load", return_value=config)

    result = runner.invoke(iwalab_test_group, ["zl", "2"])

    assert result.output == "level=2 flats=True\n"
