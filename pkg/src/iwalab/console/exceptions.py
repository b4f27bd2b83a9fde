from __future__ import annotations

import click


class IwalabExit(click.exceptions.Exit):
    pass
