"""
Unit tests for arrangement documents
"""

import json

import pytest

from harbourne import catalog
from harbourne.arrangement import Arrangement, ComponentClass, SingularitySpectrum, SurfaceKind
from harbourne.document import emit, parse, parse_file, to_dict
from harbourne.exceptions import ParseError, ValidationError
from tests.conftest import abelian_arrangement, random_spectrum

HIRZEBRUCH_GAUSS = """
{
  "label": "hirzebruch-gauss",
  "surface": "abelian",
  "ordinary": true,
  "components": [{"genus": 1, "self_intersection": 0, "count": 4}],
  "spectrum": {"4": 1}
}
"""


def _document(**changes) -> str:
    data = json.loads(HIRZEBRUCH_GAUSS)
    data.update(changes)
    return json.dumps(data)


class TestParse:
    """Test parsing valid documents"""

    def test_matches_catalog(self):
        assert parse(HIRZEBRUCH_GAUSS) == catalog.hirzebruch_gauss()

    def test_count_defaults_to_one(self):
        arr = parse(_document(components=[{"genus": 1, "self_intersection": 0}] * 4))
        assert arr.d == 4
        assert len(arr.components) == 4

    def test_zero_counts_are_dropped(self):
        arr = parse(_document(spectrum={"4": 1, "3": 0}))
        assert arr.spectrum.as_dict() == {4: 1}

    def test_override_on_non_ordinary(self):
        arr = parse(
            _document(
                surface="surface",
                ordinary=False,
                c_square_override=-12,
                spectrum={"2": 3},
            )
        )
        assert arr.c_square_override == -12
        assert not arr.ordinary

    def test_warnings_are_attached(self):
        # Two conics meeting in a single node break Bezout; accepted since not ordinary
        arr = parse(
            json.dumps(
                {
                    "label": "conics",
                    "surface": "P2",
                    "ordinary": False,
                    "components": [{"genus": 0, "self_intersection": 4, "count": 2}],
                    "spectrum": {"2": 1},
                    "c_square_override": 20,
                }
            )
        )
        assert any("pair count" in warning for warning in arr.warnings)

    def test_parse_file(self, tmp_path):
        path = tmp_path / "gauss.json"
        path.write_text(HIRZEBRUCH_GAUSS, encoding="utf-8")
        assert parse_file(path) == catalog.hirzebruch_gauss()

    def test_parse_missing_file(self, tmp_path):
        with pytest.raises(ParseError, match="Cannot read"):
            parse_file(tmp_path / "missing.json")

    def test_parse_file_not_utf8(self, tmp_path):
        path = tmp_path / "latin1.json"
        path.write_bytes(b"\xff\xfe{}")
        with pytest.raises(ParseError, match="UTF-8"):
            parse_file(path)


class TestParseErrors:
    """Test malformed documents and invariant violations"""

    def test_invalid_json(self):
        with pytest.raises(ParseError, match="Invalid JSON"):
            parse("{not json")

    def test_not_an_object(self):
        with pytest.raises(ParseError):
            parse("[]")

    def test_unknown_key(self):
        with pytest.raises(ParseError, match="unknown field"):
            parse(_document(colour="blue"))

    def test_missing_key(self):
        data = json.loads(HIRZEBRUCH_GAUSS)
        del data["spectrum"]
        with pytest.raises(ParseError, match="missing field"):
            parse(json.dumps(data))

    def test_multiplicity_one(self):
        with pytest.raises(ParseError):
            parse(_document(spectrum={"1": 3}))

    def test_non_decimal_key(self):
        with pytest.raises(ParseError):
            parse(_document(spectrum={"four": 1}))

    @pytest.mark.parametrize("key", ["\u00b2", "\u0664", "\uff14", " 4", "4 ", "+4"])
    def test_non_ascii_digit_key(self, key):
        with pytest.raises(ParseError, match="decimal integer"):
            parse(_document(spectrum={key: 1}))

    def test_negative_count(self):
        with pytest.raises(ParseError):
            parse(_document(spectrum={"4": -1}))

    def test_float_value(self):
        with pytest.raises(ParseError):
            parse(_document(spectrum={"4": 1.0}))

    def test_boolean_is_not_an_integer(self):
        with pytest.raises(ParseError):
            parse(_document(components=[{"genus": True, "self_intersection": 0}]))

    def test_unknown_surface(self):
        with pytest.raises(ParseError, match="surface"):
            parse(_document(surface="K3"))

    def test_negative_genus(self):
        with pytest.raises(ParseError):
            parse(_document(components=[{"genus": -1, "self_intersection": 0}]))

    def test_adjunction_failure(self):
        with pytest.raises(ValidationError) as exc_info:
            parse(_document(components=[{"genus": 1, "self_intersection": 2, "count": 4}]))
        assert any("adjunction" in error for error in exc_info.value.errors)

    def test_override_needs_non_ordinary(self):
        with pytest.raises(ValidationError):
            parse(_document(c_square_override=3))


class TestEmit:
    """Test serialization back to documents"""

    def test_canonical_key_order(self):
        data = json.loads(emit(catalog.klein()))
        assert list(data) == ["label", "surface", "ordinary", "components", "spectrum"]
        assert data["spectrum"] == {"3": 28, "4": 21}

    def test_override_only_when_set(self):
        assert "c_square_override" not in to_dict(catalog.klein())
        assert to_dict(catalog.cn_family(9).plane)["c_square_override"] == 96096

    def test_catalog_round_trip(self):
        for name in (*catalog.CATALOG, "cn-9", "hn-12", "product-2-5"):
            arr = catalog.resolve(name).arrangement
            assert parse(emit(arr)) == arr, name

    def test_random_round_trip(self, rng):
        for i in range(200):
            arr = abelian_arrangement(rng, random_spectrum(rng), label=f"random-{i}")
            assert parse(emit(arr)) == arr

    def test_non_ordinary_round_trip(self):
        arr = Arrangement(
            "cusp",
            SurfaceKind.GENERIC,
            False,
            (ComponentClass(genus=0, self_intersection=-1, count=3),),
            SingularitySpectrum.of({2: 2, 3: 1}),
            c_square_override=7,
        )
        assert parse(emit(arr)) == arr
