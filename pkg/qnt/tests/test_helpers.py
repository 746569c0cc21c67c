"""
Tests for formatting and parsing helpers
"""

from fractions import Fraction

import numpy as np
import pytest

from app.utils.helpers import (
    dump_json,
    format_float,
    format_rational,
    matrix_from_json,
    matrix_to_csv,
    matrix_to_json,
    parse_amplitude,
    parse_complex,
    parse_rational,
    rows_to_csv,
)


@pytest.mark.unit
class TestFormatting:
    """Deterministic text for emitted artifacts"""

    def test_seventeen_significant_digits(self):
        assert format_float(1.0) == "1.0000000000000000e+00"
        assert float(format_float(0.1)) == 0.1

    def test_negative_zero(self):
        assert format_float(-0.0) == format_float(0.0)

    def test_custom_digits(self):
        assert format_float(1234.5, 3) == "1.23e+03"

    def test_rational(self):
        assert format_rational(Fraction(-6, 4)) == "-3/2"
        assert format_rational(2) == "2/1"

    def test_rows_to_csv(self):
        text = rows_to_csv(["a", "b", "c"], [[1, Fraction(1, 3), 0.5], ["x", None, 1j]])
        lines = text.split("\n")
        assert lines[0] == "a,b,c"
        assert lines[1] == "1,1/3,5.0000000000000000e-01"
        assert lines[2].startswith("x,None,0.0000000000000000e+00+1.0")
        assert text.endswith("\n") and "\r" not in text

    def test_matrix_csv_header(self):
        text = matrix_to_csv(np.eye(2))
        assert text.splitlines()[0] == "c1_re,c1_im,c2_re,c2_im"
        assert len(text.splitlines()) == 3

    def test_dump_json_is_sorted(self):
        assert dump_json({"b": 1, "a": 2}) == '{\n  "a": 2,\n  "b": 1\n}\n'


@pytest.mark.unit
class TestParsing:
    """Text and JSON inputs"""

    @pytest.mark.parametrize(
        "text,value",
        [("3/2", Fraction(3, 2)), ("2", Fraction(2)), ("1.5", Fraction(3, 2)), (" -1/4 ", Fraction(-1, 4))],
    )
    def test_rational(self, text, value):
        assert parse_rational(text) == value

    @pytest.mark.parametrize("text", ["x", "1/0", ""])
    def test_bad_rational(self, text):
        with pytest.raises(ValueError):
            parse_rational(text)

    @pytest.mark.parametrize(
        "text,value", [("2", 2), ("1+1j", 1 + 1j), ("1 - 2i", 1 - 2j), (0.5, 0.5)]
    )
    def test_complex(self, text, value):
        assert parse_complex(text) == value

    def test_bad_complex(self):
        with pytest.raises(ValueError):
            parse_complex("two")

    def test_amplitudes(self):
        assert parse_amplitude(0.5) == 0.5
        assert parse_amplitude([0.0, -1.0]) == -1j
        for bad in (True, "1", [1, 2, 3], None):
            with pytest.raises(ValueError):
                parse_amplitude(bad)

    def test_matrix_json_round_trip(self):
        m = np.array([[0.1 + 0.2j, -1.0], [1 / 3, 2j]])
        assert np.array_equal(matrix_from_json(matrix_to_json(m)), m)

    def test_matrix_json_shape_check(self):
        payload = matrix_to_json(np.eye(2))
        payload["rows"] = 3
        with pytest.raises(ValueError):
            matrix_from_json(payload)
