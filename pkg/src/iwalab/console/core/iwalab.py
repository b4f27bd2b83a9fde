from __future__ import annotations

from typing import TYPE_CHECKING
from typing import Any
from typing import cast

from click import group

from iwalab.console.core.error_handler import iwalab_error_handler
from iwalab.console.core.group import AliasGroup
from iwalab.utils import wrap_methods


if TYPE_CHECKING:
    from click import Command


def iwalab_group(**kwargs: Any) -> Iwalab:
    context_settings = {
        "help_option_names": ["-h", "--help"],
    }
    cli = group(cls=Iwalab, context_settings=context_settings, **kwargs)
    return cast(Iwalab, cli)


@wrap_methods(iwalab_error_handler, ["make_context", "invoke"])
class Iwalab(AliasGroup):
    def add_commands(self, commands: list[Command]) -> None:
        for command in commands:
            self.add_command(command)
