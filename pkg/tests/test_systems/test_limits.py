from __future__ import annotations

import pytest

from iwalab.systems.limits import funeq_check
from iwalab.systems.limits import limit_invariants
from iwalab.systems.limits import sharp_twist
from iwalab.systems.system import MAP_NAMES
from iwalab.systems.system import mutate


def test_limit_invariants_stabilize(cyclic_system):
    invariants = limit_invariants(cyclic_system)

    assert invariants.stabilized
    assert [profile.b for profile in invariants.levels] == [(3,), (9,), (27,)]
    assert invariants.levels[-1].stabilized is None


def test_single_level_has_nothing_to_compare(cyclic_system):
    assert limit_invariants(cyclic_system.truncate(0)).stabilized is None


def test_sharp_twist_inverts_the_action(cyclic_system):
    b = cyclic_system.level(1).b

    twisted = sharp_twist(b)

    assert twisted.congruent(twisted.actions[0], b.inverse_action(0))


def test_funeq_holds_for_lambda_mod_p(mod_p_system):
    report = funeq_check(mod_p_system)

    assert report.passed
    assert all(level.divisors_equal for level in report.levels)
    assert report.to_report().passed


def test_funeq_holds_for_a_cyclic_quotient(cyclic_system):
    report = funeq_check(cyclic_system)

    assert report.passed
    assert [level.equivariant for level in report.levels] == ["isomorphic"] * 3


def test_funeq_with_exhausted_budget_stays_undetermined(mod_p_system):
    report = funeq_check(mod_p_system, node_budget=0)

    assert report.passed
    assert report.levels[0].equivariant == "undetermined"
    checks = report.to_report().by_axiom("funeq")
    assert [check.name for check in checks][:2] == [
        "divisors",
        "equivariant: undetermined",
    ]


def test_funeq_leads_with_the_axiom_checks(cyclic_system):
    report = funeq_check(cyclic_system)

    checks = report.to_report().checks
    assert report.axioms.passed
    assert checks[0].axiom == "Γ-1"
    assert checks[-1].axiom == "funeq"


@pytest.mark.parametrize("name", MAP_NAMES)
def test_funeq_fails_on_a_corrupted_structure_map(cyclic_system, name):
    report = funeq_check(mutate(cyclic_system, 0, 1, name))

    assert not report.passed
    assert not report.axioms.passed
    failure = report.to_report().failures()[0]
    assert failure.axiom.startswith("Γ-")
    assert "n=" in failure.location
    assert failure.witness
