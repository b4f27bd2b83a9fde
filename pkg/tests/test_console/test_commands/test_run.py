from __future__ import annotations

import json

import pytest

from click.testing import CliRunner
from freezegun import freeze_time

from iwalab.ideals.elementary import ElementaryModule
from iwalab.serialization.codec import dump_system
from iwalab.systems.synthesis import from_torsion_module
from iwalab.systems.system import mutate
from iwalab.termui import icons
from tests.conftest import pytest_regex
from tests.test_systems.conftest import GAMMA
from tests.test_systems.conftest import PRIME
from tests.test_systems.conftest import gamma_minus


runner = CliRunner(mix_stderr=False)


@pytest.mark.functional
def test_validate(cli, fixture_path):
    result = runner.invoke(cli, ["validate", fixture_path("cyclic.json")])

    assert result.exit_code == 0
    assert result.output.startswith("> validate: p=3, d=1, levels=2\n")
    summary = rf"(?m)^{icons.SUCCESS}\(success\) All \d+ checks passed$"
    assert pytest_regex(r"(?m)^ +axiom +check +at +witness$") == result.output
    assert pytest_regex(summary) == result.output


@pytest.mark.functional
def test_validate_json_is_deterministic(cli, fixture_path):
    args = ["validate", fixture_path("cyclic.json"), "--json"]

    first = runner.invoke(cli, args)
    second = runner.invoke(cli, [*args, "--jobs", "3"])

    assert first.exit_code == 0
    assert json.loads(first.output)["passed"] is True
    assert json.loads(first.output)["checks"] == json.loads(second.output)["checks"]


@pytest.mark.functional
def test_ns_check_violation_exits_with_one(cli, fixture_path):
    result = runner.invoke(cli, ["ns-check", fixture_path("augmentation.json")])

    summary = rf"(?m)^{icons.ERROR}\(error\) \d+ of \d+ checks failed$"
    assert result.exit_code == 1
    assert pytest_regex(r"(?m)^.*verdict: violated$") == result.output
    assert pytest_regex(summary) == result.output


@pytest.mark.functional
def test_schema_error_exits_with_two(cli, write_document):
    path = write_document({"header": {"d": 1, "precision": 4, "levels": 2}})

    result = runner.invoke(cli, ["validate", str(path)])

    assert result.exit_code == 2
    assert f"{icons.ERROR}(error) header.p: missing field\n" in result.stderr


@pytest.mark.functional
def test_missing_document(cli, tmp_path):
    result = runner.invoke(cli, ["validate", str(tmp_path / "nowhere.json")])

    assert result.exit_code == 2
    assert icons.ERROR in result.stderr


@pytest.mark.functional
def test_zero_set_json(cli, fixture_path):
    args = ["zero-set", fixture_path("remark.json"), "--level", "1", "--flats"]

    result = runner.invoke(cli, [*args, "--json"])

    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["command"] == "zero-set"
    assert report["config"]["budget"] == 729
    assert report["results"]["zeros"] == [[0, 0]]
    assert report["results"]["flats"][0]["codimension"] == 2
    assert "timing" not in report


@pytest.mark.functional
def test_zero_set_flats_at_level_zero(cli, fixture_path):
    args = ["zero-set", fixture_path("remark.json"), "--level", "0", "--flats"]

    result = runner.invoke(cli, [*args, "--json"])

    assert result.exit_code == 0
    results = json.loads(result.output)["results"]
    assert results["zeros"] == [[0, 0]]
    assert results["flats"] == [{"basis": [], "targets": [], "codimension": 0}]


@pytest.mark.functional
def test_budget_flag(cli, fixture_path):
    args = ["zero-set", fixture_path("remark.json"), "--level", "2", "--budget", "9"]

    result = runner.invoke(cli, args)

    assert result.exit_code == 2
    assert "over the budget of 9" in result.stderr


@pytest.mark.functional
@freeze_time("2026-01-01")
def test_timing_block(cli, fixture_path):
    args = ["char-ideal", fixture_path("cyclic.json"), "--json", "--timing"]

    result = runner.invoke(cli, args)

    timing = json.loads(result.output)["timing"]
    assert timing["started"] == "2026-01-01T00:00:00"


@pytest.mark.functional
def test_synthesize_then_validate(cli, fixture_path, tmp_path):
    out = tmp_path / "system.json"

    result = runner.invoke(
        cli, ["synthesize", fixture_path("cyclic.json"), "--out", str(out)]
    )

    assert result.exit_code == 0
    assert json.loads(out.read_text())["header"]["levels"] == 2

    result = runner.invoke(cli, ["validate", str(out), "--json"])

    assert result.exit_code == 0
    assert json.loads(result.output)["passed"] is True


@pytest.mark.functional
def test_twist_search(cli, fixture_path):
    args = ["twist", fixture_path("product.json"), "--search", "--json"]

    result = runner.invoke(cli, args)

    assert result.exit_code == 0
    assert json.loads(result.output)["results"]["phi"] == [7]


@pytest.mark.functional
def test_split_by_p(cli, fixture_path):
    args = ["split", fixture_path("mixed.json"), "--by", "p", "--json"]

    result = runner.invoke(cli, args)

    assert result.exit_code == 0
    results = json.loads(result.output)["results"]
    assert results["p"] == {"factors": [{"xi": [[9, [0]]], "r": 1}]}


@pytest.mark.functional
def test_growth(cli, fixture_path):
    result = runner.invoke(cli, ["growth", fixture_path("augmentation.json")])

    assert result.exit_code == 0
    assert result.output.startswith("> growth: p=3, d=2, levels=1\n")


@pytest.mark.functional
def test_alias(cli, fixture_path):
    runner.invoke(cli, ["config", "alias.zs", "zero-set"])

    result = runner.invoke(cli, ["zs", fixture_path("remark.json"), "--json"])

    assert result.exit_code == 0
    assert json.loads(result.output)["command"] == "zero-set"

    runner.invoke(cli, ["config", "alias.zs", "--unset"])


@pytest.mark.functional
def test_alias_with_options(cli, fixture_path):
    runner.invoke(cli, ["config", "alias.zf", "zero-set --flats --json"])

    result = runner.invoke(cli, ["zf", fixture_path("remark.json"), "--level", "1"])

    assert result.exit_code == 0
    assert json.loads(result.output)["results"]["flats"][0]["codimension"] == 2

    runner.invoke(cli, ["config", "alias.zf", "--unset"])


@pytest.mark.functional
def test_funeq_on_a_mutated_system_exits_with_one(cli, write_document):
    module = ElementaryModule.cyclic(gamma_minus(4))
    system = from_torsion_module(module, PRIME, GAMMA, 2)
    header = {"p": 3, "d": 1, "precision": 4, "levels": 2}
    path = write_document(
        {"header": header, "system": dump_system(mutate(system, 0, 1, "k_a"))}
    )

    result = runner.invoke(cli, ["funeq", str(path)])

    summary = rf"(?m)^{icons.ERROR}\(error\) \d+ of \d+ checks failed$"
    assert result.exit_code == 1
    failed_row = rf"(?m)^ +{icons.FAILED} +Γ-\d .*n=\d +\S.*$"
    assert pytest_regex(failed_row) == result.output
    assert pytest_regex(summary) == result.output


@pytest.mark.functional
def test_mode_flag_wins_over_the_document(cli, write_document):
    header = {"p": 3, "d": 1, "precision": 4, "levels": 1}
    module = {"factors": [{"xi": [[-1, [0]], [1, [1]]], "r": 1}]}
    path = write_document({"header": header, "mode": "full", "module": module})

    full = runner.invoke(cli, ["synthesize", str(path), "--json"])
    torsion = runner.invoke(cli, ["synthesize", str(path), "--mode", "torsion"])

    assert full.exit_code == 2
    assert "use mode torsion" in full.stderr
    assert torsion.exit_code == 0
