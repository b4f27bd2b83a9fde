from __future__ import annotations

import pytest

from iwalab.config.config import Config
from iwalab.console.cli import iwalab


@pytest.fixture(scope="session")
def cli_config(test_dir):
    Config._dir = test_dir
    config = Config()
    config.save()

    return config


@pytest.fixture
def cli(monkeypatch, cli_config):
    monkeypatch.setattr(Config, "load", lambda: cli_config)
    monkeypatch.delenv("IWALAB_BUDGET", raising=False)

    yield iwalab


@pytest.fixture
def fixture_path(fixtures_dir):
    def path(name):
        return str(fixtures_dir / name)

    return path
