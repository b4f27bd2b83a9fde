from __future__ import annotations

import os

from dataclasses import dataclass
from typing import Any
from typing import Mapping
from typing import Optional

import click

from iwalab.config.config import Config
from iwalab.locations import BUDGET_ENV_VAR
from iwalab.services.exceptions import SessionError


@dataclass(frozen=True)
class Settings:
    budget: int = 729
    node_budget: int = 20000
    jobs: int = 1
    precision: Optional[int] = None
    json: bool = False
    timing: bool = False

    def echo(self) -> dict[str, Any]:
        """The settings that can change a result, as echoed in reports."""
        return {
            "budget": self.budget,
            "node_budget": self.node_budget,
            "precision": self.precision,
        }


def _env_budget() -> int | None:
    value = os.environ.get(BUDGET_ENV_VAR)
    if value is None or value == "":
        return None
    if not value.isdigit() or int(value) < 1:
        raise SessionError(
            f"{BUDGET_ENV_VAR} must be a positive integer, got {value!r}."
        )
    return int(value)


class Session:
    """
    The state shared by a CLI invocation.

    It holds the loaded configuration and resolves the runtime settings of a
    command: flag, then environment, then config file, then defaults.
    """

    def __init__(self, config: Config) -> None:
        self._config = config

    @classmethod
    def create(cls) -> Session:
        return Session(config=Config.load())

    @property
    def config(self) -> Config:
        return self._config

    def settings(self, overrides: Mapping[str, Any] | None = None) -> Settings:
        overrides = {k: v for k, v in (overrides or {}).items() if v is not None}
        budget = _env_budget()
        if budget is None:
            budget = self._config.integer("core.budget")
        return Settings(
            budget=overrides.get("budget", budget or Settings.budget),
            node_budget=overrides.get(
                "node_budget",
                self._config.integer("core.node_budget") or Settings.node_budget,
            ),
            jobs=overrides.get("jobs", self._config.integer("core.jobs") or 1),
            precision=overrides.get(
                "precision", self._config.integer("core.precision")
            ),
            json=bool(overrides.get("json", False)),
            timing=bool(overrides.get("timing", False)),
        )

    def bind_context(self, ctx: click.Context) -> None:
        """
        Register the current session into Click context.
        """
        ctx.obj = self


def get_current_session() -> Session:
    ctx = click.get_current_context()
    if not isinstance(ctx.obj, Session):
        raise SessionError(
            "It appears that you are trying to invoke a command outside "
            "of the CLI context"
        )

    return ctx.obj
