from __future__ import annotations

import logging
import shlex

import click

from iwalab.config.config import Config


logger = logging.getLogger(__name__)


class AliasGroup(click.Group):
    """
    A group that looks unknown command names up in the ``alias`` section.

    An alias may carry options, ``alias.zf = zero-set --flats`` runs
    ``zero-set --flats`` followed by whatever was typed after ``zf``.
    """

    @staticmethod
    def expand_alias(name: str) -> list[str]:
        config = Config.load()
        option = f"alias.{name}"
        if option not in config:
            return [name]

        expansion = shlex.split(config[option])
        logger.debug("Alias %s expands to %s", name, expansion)
        return expansion

    def resolve_command(
        self, ctx: click.Context, args: list[str]
    ) -> tuple[str | None, click.Command | None, list[str]]:
        if args and click.Group.get_command(self, ctx, args[0]) is None:
            args = [*self.expand_alias(args[0]), *args[1:]]

        # always return the command's name, not the alias
        _, cmd, args = super().resolve_command(ctx, args)
        cmd_name = cmd if cmd is None else cmd.name
        return cmd_name, cmd, args
