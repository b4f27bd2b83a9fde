from __future__ import annotations

import logging

from concurrent.futures import ThreadPoolExecutor
from typing import Any
from typing import Callable
from typing import Iterable
from typing import Sequence
from typing import Type
from typing import TypeVar

import click

from iwalab import __app_name__


T = TypeVar("T")
R = TypeVar("R")

_LOG_LEVELS = [logging.WARNING, logging.INFO, logging.DEBUG]


def wrap_methods(
    decorator: Callable[[Type[T]], Any], methods: list[str]
) -> Callable[[Type[T]], Any]:
    """
    Wraps all methods of a class with the given decorator.
    """

    def wrapper(cls: Type[T]) -> Any:
        for method in methods:
            setattr(cls, method, decorator(getattr(cls, method)))
        return cls

    return wrapper


class ClickHandler(logging.Handler):
    """Echo records on whatever stderr click sees at emit time."""

    def emit(self, record: logging.LogRecord) -> None:
        try:
            click.echo(self.format(record), err=True)
        except Exception:
            self.handleError(record)


def configure_logging(verbosity: int) -> None:
    """
    Send the package log records to stderr, more of them as verbosity grows.
    """
    logger = logging.getLogger(__app_name__)
    level = _LOG_LEVELS[min(max(verbosity, 0), len(_LOG_LEVELS) - 1)]
    logger.setLevel(level)
    if not any(isinstance(h, ClickHandler) for h in logger.handlers):
        handler = ClickHandler()
        handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
        logger.addHandler(handler)


def parallel_map(func: Callable[[T], R], items: Sequence[T], jobs: int = 1) -> list[R]:
    """
    Map ``func`` over ``items`` with up to ``jobs`` threads.

    The result keeps the order of ``items`` whatever the worker count.
    """
    if jobs <= 1 or len(items) <= 1:
        return [func(item) for item in items]

    with ThreadPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(func, items))


def chunked(items: Sequence[T], size: int) -> Iterable[Sequence[T]]:
    for start in range(0, len(items), max(size, 1)):
        yield items[start : start + size]
