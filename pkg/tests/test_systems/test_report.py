from __future__ import annotations

import pytest

from iwalab.systems.report import AXIOMS
from iwalab.systems.report import CheckResult
from iwalab.systems.report import SystemReport
from iwalab.systems.report import validate


def test_judge():
    assert CheckResult.judge("Γ-1", "action", "n=0", None).passed
    failed = CheckResult.judge("Γ-1", "action", "n=0", "broken")
    assert not failed.passed
    assert failed.witness == "broken"


def test_report_helpers():
    checks = (
        CheckResult.judge("Γ-1", "x", "n=0", None),
        CheckResult.judge("Γ-3", "y", "n=0", "bad"),
    )
    report = SystemReport(checks, ())

    assert not report.passed
    assert report.failures() == [checks[1]]
    assert report.axiom_passed("Γ-1")
    assert not report.axiom_passed("Γ-3")
    assert list(report) == list(checks)


def test_synthesized_system_satisfies_every_axiom(cyclic_system):
    report = validate(cyclic_system)

    assert report.passed
    assert {check.axiom for check in report} == set(AXIOMS)
    assert [level.b_order for level in report.levels] == [3, 9, 27]


def test_checks_are_ordered_by_axiom(cyclic_system):
    report = validate(cyclic_system)

    axioms = [check.axiom for check in report]
    assert axioms == sorted(axioms, key=AXIOMS.index)


@pytest.mark.parametrize("jobs", [1, 2])
def test_parallel_validation_agrees(cyclic_system, jobs):
    assert validate(cyclic_system, jobs).checks == validate(cyclic_system).checks
