from __future__ import annotations

import logging

from typing import Any
from typing import Mapping

from iwalab.console.exceptions import IwalabExit
from iwalab.serialization.job import load_document
from iwalab.serialization.job import parse_spec
from iwalab.serialization.report import ReportDocument
from iwalab.services.runner import run
from iwalab.services.session import Settings
from iwalab.services.session import get_current_session
from iwalab.termui import printer
from iwalab.termui.components import CheckTable
from iwalab.termui.components import ErrorNotification
from iwalab.termui.components import KeyValueBlock
from iwalab.termui.components import SuccessNotification


logger = logging.getLogger(__name__)


def execute(
    command: str,
    path: str,
    flags: Mapping[str, Any],
    options: Mapping[str, Any],
) -> None:
    """Run ``command`` on the document at ``path`` and print its report."""
    session = get_current_session()
    settings = session.settings(options)
    logger.info("Running %s on %s", command, path)
    job = parse_spec(load_document(path), command, flags)
    report = run(job, settings)
    emit(report, settings)
    if not report.passed:
        raise IwalabExit(report.exit_code)


def emit(report: ReportDocument, settings: Settings) -> None:
    if settings.json:
        printer.raw(report.to_json())
        return

    config = report.config
    printer.banner(
        f"{report.command}: p={config['p']}, d={config['d']}, "
        f"levels={config['levels']}"
    )
    if report.results:
        printer.echo(KeyValueBlock(report.results))
    if report.timing is not None:
        printer.echo(KeyValueBlock(report.timing.to_dict()))
    if not report.checks:
        return

    printer.echo(CheckTable(report.checks))
    failures = report.failures()
    if failures:
        printer.echo(
            ErrorNotification(f"{len(failures)} of {len(report.checks)} checks failed")
        )
    else:
        printer.echo(SuccessNotification(f"All {len(report.checks)} checks passed"))
