from __future__ import annotations

import datetime
import json

from fractions import Fraction

import pytest

from freezegun import freeze_time

from iwalab.serialization.exceptions import SchemaError
from iwalab.serialization.job import load_document
from iwalab.serialization.job import parse_spec
from iwalab.services.exceptions import SessionError
from iwalab.services.runner import run
from iwalab.services.session import Settings


@pytest.fixture
def job(document):
    def build(name, command, **flags):
        return parse_spec(document(name), command, flags)

    return build


def test_validate_synthesized_system(job):
    report = run(job("cyclic.json", "validate"), Settings())

    assert report.passed
    assert report.exit_code == 0
    assert [level["b_order"] for level in report.results["levels"]] == [3, 9, 27]
    assert {check.axiom for check in report.checks} >= {"Γ-1", "Γ-3"}


def test_report_config_echo(job):
    report = run(job("cyclic.json", "validate"), Settings(precision=6))

    assert report.config == {
        "p": 3,
        "d": 1,
        "precision": 6,
        "levels": 2,
        "budget": 729,
        "node_budget": 20000,
        "mode": "full",
        "flags": {},
    }


def test_report_is_deterministic(job):
    first = run(job("cyclic.json", "validate"), Settings()).to_json()
    second = run(job("cyclic.json", "validate"), Settings(jobs=2)).to_json()

    assert first == second


@freeze_time("2026-01-01")
def test_timing_block(job):
    report = run(job("mod_p.json", "validate"), Settings(timing=True))

    assert report.timing.started == datetime.datetime(2026, 1, 1)
    assert report.to_dict()["timing"]["started"] == "2026-01-01T00:00:00"


def test_synthesize(job):
    report = run(job("cyclic.json", "synthesize", levels=1), Settings())

    assert report.results["orders"] == [[3, 3], [9, 9]]
    assert len(report.results["system"]["levels"]) == 2
    assert not report.checks


def test_synthesize_torsion_mode(job):
    report = run(job("mod_p.json", "synthesize", mode="torsion"), Settings())

    assert report.config["mode"] == "torsion"
    assert report.results["orders"] == [[3, 3], [27, 27]]


def test_synthesized_document_validates(job, tmp_path):
    out = tmp_path / "system.json"
    run(job("cyclic.json", "synthesize", out=str(out)), Settings())

    written = load_document(out)
    report = run(parse_spec(written, "validate"), Settings())

    assert written["header"]["levels"] == 2
    assert report.passed
    assert [level["a_order"] for level in report.results["levels"]] == [3, 9, 27]


def test_synthesize_cannot_write(job, tmp_path):
    out = tmp_path / "missing" / "system.json"

    with pytest.raises(SessionError, match="Cannot write"):
        run(job("cyclic.json", "synthesize", out=str(out)), Settings())


def test_char_ideal(job):
    report = run(job("cyclic.json", "char-ideal"), Settings())

    assert report.passed
    assert report.results["chi"] == "(-4 + g1)"
    assert report.results["generator"] == [[-4, [0]], [1, [1]]]
    assert report.results["sizes"] == [3, 9, 27]
    assert report.results["sharp_stable"] is False
    assert report.results["factors"] == [{"xi": "-4 + g1", "kind": "unknown"}]
    assert [check.location for check in report.checks] == ["n=0", "n=1", "n=2"]


def test_char_ideal_with_infinite_levels(write_document):
    document = {
        "header": {"p": 3, "d": 2, "precision": 4, "levels": 1},
        "module": {"factors": [{"xi": [[-1, [0, 0]], [1, [1, 0]]], "r": 1}]},
        "elements": [
            [[-1, [0, 0]], [1, [1, 0]]],
            [[-1, [0, 0]], [1, [0, 1]]],
        ],
    }
    job = parse_spec(load_document(write_document(document)), "char-ideal")

    report = run(job, Settings())

    assert report.results["sizes"] == [None, None]
    assert report.results["factors"][0]["kind"] == "simple"
    assert report.results["pseudo_null"] == {
        "verdict": "certified",
        "pair": [0, 1],
        "reason": "distinct simple elements",
    }
    assert not report.checks


def test_zero_set_with_flats(job):
    report = run(job("remark.json", "zero-set", level=1, flats=True), Settings())

    assert report.passed
    assert report.results["count"] == 1
    assert report.results["zeros"] == [[0, 0]]
    assert report.results["flats"] == [
        {"basis": [[1, 0], [0, 1]], "targets": [0, 0], "codimension": 2}
    ]
    assert report.results["residual"] == []


def test_zero_set_defaults_to_the_top_level(job):
    report = run(job("remark.json", "zero-set"), Settings())

    assert report.results["level"] == 2
    assert "flats" not in report.results
    assert not report.checks


def test_zero_set_needs_an_element(write_document):
    document = {"header": {"p": 3, "d": 1, "precision": 4, "levels": 1}}
    job = parse_spec(load_document(write_document(document)), "zero-set")

    with pytest.raises(SchemaError, match="element: missing field"):
        run(job, Settings())


def test_ns_check_holds(job):
    report = run(job("remark.json", "ns-check", level=1), Settings())

    assert report.passed
    assert report.results["verdict"] == "holds"


def test_ns_check_violated(job):
    report = run(job("augmentation.json", "ns-check"), Settings())

    assert not report.passed
    assert report.exit_code == 1
    assert report.results["verdict"] == "violated"
    assert report.results["flats"][0]["codimension"] == 1
    assert report.failures()[0].witness.startswith("violated at level 1")


def test_funeq(job):
    report = run(job("cyclic.json", "funeq"), Settings())

    assert report.passed
    assert [level["level"] for level in report.results["levels"]] == [0, 1, 2]
    assert all(level["divisors_equal"] for level in report.results["levels"])
    assert {check.axiom for check in report.checks} >= {"Γ-3", "funeq"}


def test_fourier_check(job):
    report = run(job("mod_p.json", "fourier-check", samples=5, seed=1), Settings())

    assert report.passed
    assert {check.name for check in report.checks} >= {"round trip", "linearity"}


def test_twist_by_a_given_character(job):
    report = run(job("cyclic.json", "twist", phi="4"), Settings())

    assert report.passed
    assert report.results["phi"] == [4]
    assert "chi" in report.results
    assert report.results["orders"] == [[3, 3], [9, 9], [27, 27]]


def test_twist_search(job):
    report = run(job("product.json", "twist", search=True, order=1), Settings())

    assert report.passed
    assert report.results["phi"] == [7]
    assert [check.location for check in report.checks] == ["n=0", "n=1"]
    assert "orders" not in report.results


@pytest.mark.parametrize(
    "flags, message",
    [
        ({}, "give --phi"),
        ({"phi": "4,4"}, "expected 1 values, got 2"),
        ({"phi": "four"}, "expected integers"),
    ],
)
def test_twist_errors(job, flags, message):
    with pytest.raises(SchemaError, match=message):
        run(job("cyclic.json", "twist", **flags), Settings())


def test_split_simple(job):
    report = run(job("mixed.json", "split"), Settings())

    assert report.results["si"] == {"factors": [{"xi": [[-1, [0]], [1, [1]]], "r": 1}]}
    assert [v["kind"] for v in report.results["verdicts"]] == [
        "simple",
        "non-simple",
        "non-simple",
    ]


def test_split_p(job):
    report = run(job("mixed.json", "split", by="p"), Settings())

    assert report.results["p"] == {"factors": [{"xi": [[9, [0]]], "r": 1}]}
    assert len(report.results["np"]["factors"]) == 2


def test_split_by_something_else(job):
    with pytest.raises(SchemaError, match="expected simple or p"):
        run(job("mixed.json", "split", by="q"), Settings())


def test_growth(job):
    report = run(job("augmentation.json", "growth"), Settings())

    assert report.passed
    assert report.results["ranks"] == [1, 3]
    assert report.results["constant"] == Fraction(1)
    assert json.loads(report.to_json())["results"]["constant"] == "1"


def test_unknown_command(job):
    with pytest.raises(SessionError, match="Unknown command 'frobnicate'"):
        run(job("cyclic.json", "frobnicate"), Settings())
