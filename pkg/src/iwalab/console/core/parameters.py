from __future__ import annotations

from typing import Any
from typing import Callable
from typing import Mapping
from typing import TypeVar

import click

from click import Parameter


F = TypeVar("F", bound=Callable[..., Any])


class NotRequired(click.Option):
    def __init__(self, *args: Any, not_required: list[str], **kwargs: Any) -> None:
        self.not_required = not_required
        super().__init__(*args, **kwargs)

    def handle_parse_result(
        self, ctx: click.Context, opts: Mapping[str, Any], args: list[str]
    ) -> tuple[Any, list[str]]:
        params = {p.name: p for p in ctx.command.get_params(ctx)}
        current_opt: bool = self.name in opts

        for not_required_opt in self.not_required:
            other_option: bool = not_required_opt in opts and opts[not_required_opt]
            if all([current_opt, other_option]):
                param: Parameter = params[not_required_opt]
                raise click.exceptions.UsageError(
                    f"Unnecessary {param.param_type_name} "
                    f"'{param.human_readable_name}' provided",
                    ctx=ctx,
                )

        return super().handle_parse_result(ctx, opts, args)


def document_argument(func: F) -> F:
    return click.argument(
        "document",
        metavar="<file>",
        type=click.Path(dir_okay=False, path_type=str),
    )(func)


def runtime_options(func: F) -> F:
    """--budget, --precision, --jobs, --json and --timing, collected in ``runtime``."""
    options = [
        click.option(
            "--budget",
            type=click.IntRange(min=1),
            help="Largest number of characters enumerated at one level",
        ),
        click.option(
            "--precision",
            type=click.IntRange(min=1),
            help="p-adic precision M, overrides the document header",
        ),
        click.option(
            "--jobs",
            type=click.IntRange(min=1),
            help="Worker threads, output does not depend on it",
        ),
        click.option("--json", "json_output", is_flag=True, help="Print JSON"),
        click.option("--timing", is_flag=True, help="Add a timing block"),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def runtime(kwargs: dict[str, Any]) -> dict[str, Any]:
    """Pop the runtime options of a command into a settings override mapping."""
    return {
        "budget": kwargs.pop("budget"),
        "precision": kwargs.pop("precision"),
        "jobs": kwargs.pop("jobs"),
        "json": kwargs.pop("json_output"),
        "timing": kwargs.pop("timing"),
    }
