"""
Unit tests for the CSV and JSON result serializers.
"""

import json
from fractions import Fraction

import numpy as np
import pytest

from typeb_fock.errors import ArgumentError
from typeb_fock.processing.serializers import SerializerRegistry, plain_value


ROWS = [
    {"k": 0, "moment": 1.0, "exact": Fraction(1, 1)},
    {"k": 2, "moment": np.float64(1.5), "exact": Fraction(3, 2)},
]


class TestPlainValue:
    """Conversion of numpy, complex and exact values."""

    @pytest.mark.unit
    def test_numpy_scalar(self):
        value = plain_value(np.float64(0.25))
        assert value == 0.25 and type(value) is float

    @pytest.mark.unit
    def test_complex(self):
        assert plain_value(2 + 0j) == 2.0
        assert plain_value(1 - 2j) == [1.0, -2.0]

    @pytest.mark.unit
    def test_nested(self):
        assert plain_value({"a": (Fraction(1, 3), np.int64(2))}) == {"a": ["1/3", 2]}


class TestRegistry:
    """Format lookup."""

    @pytest.mark.unit
    def test_formats(self):
        assert SerializerRegistry.formats() == ["csv", "json"]

    @pytest.mark.unit
    def test_lookup_is_case_insensitive(self):
        assert SerializerRegistry.get(" JSON ") is SerializerRegistry.get("json")

    @pytest.mark.unit
    def test_unknown_format(self):
        with pytest.raises(ArgumentError):
            SerializerRegistry.get("xml")


class TestCSV:
    """CSV output with metadata comments."""

    @pytest.mark.serialization
    def test_header_and_rows(self):
        text = SerializerRegistry.get("csv").serialize(ROWS, meta={"alpha": 0.5})
        lines = text.splitlines()
        assert lines[0] == "# alpha=0.5"
        assert lines[1] == "k,moment,exact"
        assert lines[3] == "2,1.5,3/2"

    @pytest.mark.serialization
    def test_full_precision(self):
        text = SerializerRegistry.get("csv").serialize([{"x": 0.1}])
        assert text.splitlines()[1] == "0.10000000000000001"

    @pytest.mark.serialization
    def test_empty_rows(self):
        assert SerializerRegistry.get("csv").serialize([], meta={"q": 0.0}) == "# q=0\n"

    @pytest.mark.serialization
    def test_save(self, tmp_path):
        path = tmp_path / "out" / "table.csv"
        SerializerRegistry.get("csv").save(ROWS, path)
        assert path.read_text(encoding="utf-8").startswith("k,moment,exact")


class TestJSON:
    """Document and JSON-lines output."""

    @pytest.mark.serialization
    def test_document(self):
        text = SerializerRegistry.get("json").serialize(ROWS, meta={"q": 0.3})
        data = json.loads(text)
        assert data["meta"] == {"q": 0.3}
        assert data["rows"][1] == {"k": 2, "moment": 1.5, "exact": "3/2"}

    @pytest.mark.serialization
    def test_lines(self):
        text = SerializerRegistry.get("json").serialize(ROWS, lines=True)
        rows = [json.loads(line) for line in text.splitlines()]
        assert [row["k"] for row in rows] == [0, 2]

    @pytest.mark.serialization
    def test_float_round_trip(self):
        value = 1 / 3
        text = SerializerRegistry.get("json").serialize([{"v": value}], pretty=False)
        assert json.loads(text)["rows"][0]["v"] == value
