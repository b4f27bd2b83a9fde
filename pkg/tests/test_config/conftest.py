from __future__ import annotations

from pathlib import Path

import pytest


@pytest.fixture
def dummy_dir():
    # below a regular file, so it can be neither read nor created
    return Path(__file__) / "dummy"
