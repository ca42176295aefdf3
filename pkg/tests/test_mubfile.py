"""File format: byte-stable round trips and strict loading."""

import json

import pytest

from mubkit.construct import assemble_mub_set, build_route
from mubkit.errors import ParseError, StructuralError
from mubkit.gf import GaloisField
from mubkit.mubfile import (
    complex_cell,
    field_for,
    mub_to_text,
    parse_mub_text,
    read_mub_file,
    write_csv,
    write_mub_file,
)
from mubkit.verify import verify_mub


def _sample(p=3, r=2):
    return assemble_mub_set(build_route(GaloisField(p, r)))


def test_round_trip(tmp_path):
    mub = _sample()
    path = tmp_path / "set.json"
    write_mub_file(mub, path)
    back = read_mub_file(path)
    assert back == mub
    # re-serialization is byte-identical
    assert mub_to_text(back) == path.read_text(encoding="utf-8")


def test_round_trip_char2(tmp_path):
    mub = _sample(2, 2)
    path = tmp_path / "set.json"
    write_mub_file(mub, path)
    back = read_mub_file(path)
    assert back == mub
    assert back.exponents.base == "i"


def test_text_layout():
    text = mub_to_text(_sample())
    doc = json.loads(text)
    assert doc["format"] == "mubkit-mub" and doc["format_version"] == 1
    assert doc["p"] == 3 and doc["r"] == 2 and doc["n"] == 9
    assert doc["modulus"] == [2, 1, 1]
    assert doc["row_order"] == "lex-l" and doc["col_order"] == "lex-mk"
    # one exponent row per line
    assert sum(1 for line in text.splitlines() if line.startswith("[")) == 9
    assert text.endswith("}\n")


def test_no_floats_anywhere():
    doc = json.loads(mub_to_text(_sample()))

    def no_floats(x):
        if isinstance(x, float):
            return False
        if isinstance(x, list):
            return all(no_floats(v) for v in x)
        if isinstance(x, dict):
            return all(no_floats(v) for v in x.values())
        return True

    assert no_floats(doc)


def test_field_for(gf9):
    fld = field_for(_sample())
    assert (fld.p, fld.r, fld.modulus) == (gf9.p, gf9.r, gf9.modulus)


def test_bad_json_reports_position():
    with pytest.raises(ParseError, match=r"line \d+, column \d+ \(offset \d+\)"):
        parse_mub_text('{"format": "mubkit-mub",\n"oops"\n}')


def test_missing_file(tmp_path):
    with pytest.raises(ParseError, match="cannot read"):
        read_mub_file(tmp_path / "absent.json")


def test_semantic_rejections():
    doc = json.loads(mub_to_text(_sample()))

    bad = dict(doc)
    bad["base"] = "i"
    with pytest.raises(StructuralError):
        parse_mub_text(json.dumps(bad))

    bad = dict(doc)
    bad["modulus"] = [0, 0, 1]  # x^2 is reducible
    with pytest.raises(StructuralError, match="reducible"):
        parse_mub_text(json.dumps(bad))

    bad = dict(doc)
    bad["modulus"] = [2, 1, 1, 1]  # degree 3, but r says 2
    with pytest.raises(StructuralError, match="degree"):
        parse_mub_text(json.dumps(bad))

    bad = dict(doc)
    bad["exponents"] = doc["exponents"][:-1]
    with pytest.raises(StructuralError, match="rows"):
        parse_mub_text(json.dumps(bad))

    bad = dict(doc)
    bad["exponents"] = [row[:-1] for row in doc["exponents"]]
    with pytest.raises(StructuralError, match="entries"):
        parse_mub_text(json.dumps(bad))

    bad = dict(doc)
    bad["exponents"] = [row[:] for row in doc["exponents"]]
    bad["exponents"][0][0] = 1.5
    with pytest.raises(StructuralError, match="integers"):
        parse_mub_text(json.dumps(bad))

    bad = dict(doc)
    bad["exponents"] = [row[:] for row in doc["exponents"]]
    bad["exponents"][0][0] = 3  # out of range for base omega-p, p = 3
    with pytest.raises(StructuralError):
        parse_mub_text(json.dumps(bad))

    bad = dict(doc)
    del bad["modulus"]
    with pytest.raises(StructuralError, match="missing"):
        parse_mub_text(json.dumps(bad))

    bad = dict(doc)
    bad["format"] = "other"
    with pytest.raises(StructuralError, match="format"):
        parse_mub_text(json.dumps(bad))

    bad = dict(doc)
    bad["format_version"] = 2
    with pytest.raises(StructuralError, match="version"):
        parse_mub_text(json.dumps(bad))

    bad = dict(doc)
    bad["n"] = 8
    with pytest.raises(StructuralError):
        parse_mub_text(json.dumps(bad))

    bad = dict(doc)
    bad["includes_standard"] = "yes"
    with pytest.raises(StructuralError, match="boolean"):
        parse_mub_text(json.dumps(bad))


def test_mutated_exponent_parses_but_fails_verification():
    doc = json.loads(mub_to_text(_sample()))
    doc["exponents"][1][4] = (doc["exponents"][1][4] + 1) % 3
    mub = parse_mub_text(json.dumps(doc))
    assert not verify_mub(mub, "exact").passed


def test_csv_cell_format():
    assert complex_cell(complex(1, 0)) == "1+0i"
    assert complex_cell(complex(0.5, -0.25)) == "0.5-0.25i"
    assert complex_cell(complex(-1, 0)) == "-1+0i"


def test_csv_export(tmp_path):
    mub = _sample(2, 1)
    path = tmp_path / "set.csv"
    write_csv(mub, path)
    rows = path.read_text(encoding="utf-8").strip().split("\n")
    assert len(rows) == 2
    assert all(len(row.split(",")) == 2 * 2 + 2 for row in rows)
    # hand-checked cells: 1/sqrt(2) scaling of the four fourth roots
    assert rows[0].split(",")[0] == "0.70710678118654746+0i"
    assert "0+0.70710678118654746i" in rows[1]
    assert "-0.70710678118654746+0i" in rows[1]
    assert "0-0.70710678118654746i" in rows[1]
    # standard basis columns stay exact
    assert rows[0].split(",")[4:] == ["1+0i", "0+0i"]
    assert rows[1].split(",")[4:] == ["0+0i", "1+0i"]
