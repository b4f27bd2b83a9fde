from __future__ import annotations

import shlex

from abc import ABC
from abc import abstractmethod
from typing import Type

from iwalab.config.exceptions import ConfigError


class ConfigPolicies:
    def __init__(self, policies: dict[str, Type[ConfigPolicy]] | None = None) -> None:
        self._policies = policies or {}

    def _check(self, section: str, key: str, value: str | None = None) -> None:
        policy = self._policies.get(section)
        if policy is None:
            raise ConfigError(f"Unknown config section '{section}'.")

        if value is not None:
            policy(key).check_input(value)
        else:
            policy(key).check_deletion()

    def check_input(self, section: str, key: str, value: str) -> None:
        self._check(section=section, key=key, value=value)

    def check_deletion(self, section: str, key: str) -> None:
        self._check(section=section, key=key)


class ConfigPolicy(ABC):
    section: str | None = None

    def __init__(self, key: str) -> None:
        self.key = key

    @property
    def option(self) -> str:
        return f"{self.section}.{self.key}"

    @abstractmethod
    def check_input(self, value: str) -> None:
        raise NotImplementedError

    @abstractmethod
    def check_deletion(self) -> None:
        raise NotImplementedError


class CorePolicy(ConfigPolicy):
    section = "core"
    required = ["budget", "node_budget", "jobs"]
    optional = ["precision"]

    def check_input(self, value: str) -> None:
        if self.key not in self.required + self.optional:
            raise ConfigError(f"Unknown config option '{self.option}'.")
        if self.key in self.optional and value == "":
            return
        if not value.isdigit() or int(value) < 1:
            raise ConfigError(
                f"Config option '{self.option}' must be a positive integer."
            )

    def check_deletion(self) -> None:
        if self.key in self.required:
            raise ConfigError(
                f"Deletion of config option '{self.option}' is forbidden."
            )


class AliasPolicy(ConfigPolicy):
    """``alias.<name> = <command> [options]``, the command must exist."""

    section = "alias"

    def check_input(self, value: str) -> None:
        from iwalab.console.cli import iwalab

        commands = iwalab.commands
        try:
            words = shlex.split(value)
        except ValueError as error:
            raise ConfigError(f"Alias '{value}' cannot be parsed: {error}.")

        if not words or words[0] not in commands:
            raise ConfigError("Alias must refer to an existing command.")

        if self.key in commands:
            raise ConfigError("Alias cannot override an existing command.")

    def check_deletion(self) -> None:
        pass
