from __future__ import annotations

import pytest

from iwalab.serialization.codec import dump_system
from iwalab.serialization.exceptions import SchemaError
from iwalab.serialization.job import load_document
from iwalab.serialization.job import parse_spec


HEADER = {"p": 3, "d": 1, "precision": 4, "levels": 2}


def test_load_document(fixtures_dir):
    document = load_document(fixtures_dir / "cyclic.json")

    assert document["header"] == HEADER


def test_load_missing_document(tmp_path):
    with pytest.raises(SchemaError, match="cannot read the file"):
        load_document(tmp_path / "missing.json")


def test_load_malformed_document(tmp_path):
    path = tmp_path / "job.json"
    path.write_text('{"header": ')

    with pytest.raises(SchemaError, match=r"not a JSON document \(line 1"):
        load_document(path)


def test_parse_spec_with_nested_header(document):
    job = parse_spec(document("cyclic.json"), "char-ideal", {"levels": 1})

    assert job.command == "char-ideal"
    assert (job.p, job.d, job.levels) == (3, 1, 2)
    assert job.prime.precision == 4
    assert job.mode == "full"
    assert len(job.module) == 1
    assert job.element is None
    assert job.header() == HEADER
    assert job.flags == {"levels": 1}


def test_parse_spec_with_top_level_header(document):
    job = parse_spec(document("remark.json"), "zero-set")

    assert job.d == 2
    assert job.gamma.labels == ("s", "t")
    assert job.element.format(job.gamma.labels) == "5 - 6*t - 8*s + 9*s*t"


@pytest.mark.parametrize(
    "header, message",
    [
        ({"d": 1, "precision": 4, "levels": 2}, "header.p: missing field"),
        ({**HEADER, "p": 1}, "header.p: expected an integer >= 2, got 1"),
        ({**HEADER, "d": 0}, "header.d: expected an integer >= 1, got 0"),
        ({**HEADER, "levels": -1}, "header.levels: expected an integer >= 0, got -1"),
        ({**HEADER, "labels": "s"}, "header.labels: expected a list, got str"),
    ],
)
def test_parse_spec_header_errors(header, message):
    with pytest.raises(SchemaError) as excinfo:
        parse_spec({"header": header}, "validate")

    assert excinfo.value.message == message


def test_parse_spec_needs_an_object():
    with pytest.raises(SchemaError, match="document: expected an object, got list"):
        parse_spec([], "validate")


@pytest.mark.parametrize("flag", ["level", "levels"])
def test_level_flags_stay_within_the_header(flag):
    with pytest.raises(SchemaError, match=f"--{flag}: level 3 is outside 0..2"):
        parse_spec({"header": HEADER}, "zero-set", {flag: 3})


def test_flag_mode_wins_over_the_document():
    document = {"header": HEADER, "mode": "full"}

    job = parse_spec(document, "synthesize", {"mode": "torsion"})

    assert job.mode == "torsion"


def test_document_mode_applies_without_a_flag():
    document = {"header": HEADER, "mode": "torsion"}

    job = parse_spec(document, "synthesize", {"mode": None})

    assert job.mode == "torsion"


def test_flag_mode_applies_without_a_document_mode():
    job = parse_spec({"header": HEADER}, "synthesize", {"mode": "torsion"})

    assert job.mode == "torsion"


def test_unknown_mode():
    with pytest.raises(SchemaError, match="mode: expected one of full, torsion"):
        parse_spec({"header": HEADER, "mode": "half"}, "synthesize")


def test_parse_spec_with_elements():
    elements = [[[-1, [0]], [1, [1]]], [[3, [0]]]]

    job = parse_spec({"header": HEADER, "elements": elements}, "char-ideal")

    assert [x.format() for x in job.elements] == ["-1 + g1", "3"]


def test_element_errors_are_located():
    with pytest.raises(SchemaError, match=r"elements\[1\]: expected a list"):
        parse_spec({"header": HEADER, "elements": [[], {}]}, "char-ideal")


def test_parse_spec_with_system(cyclic_system):
    job = parse_spec(
        {"header": HEADER, "system": dump_system(cyclic_system)}, "validate"
    )

    assert job.system.orders() == cyclic_system.orders()


def test_system_beyond_the_header(cyclic_system):
    header = {**HEADER, "levels": 1}

    with pytest.raises(SchemaError) as excinfo:
        parse_spec({"header": header, "system": dump_system(cyclic_system)}, "funeq")

    assert excinfo.value.message == (
        "system.levels: 3 levels given, the header allows 2"
    )
