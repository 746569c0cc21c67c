"""
Formatting and parsing helpers for emitted artifacts
"""

import csv
import io
import json
from fractions import Fraction
from typing import Any, Iterable, Sequence, Union

import numpy as np

from app.config.settings import settings

Number = Union[int, float, complex, Fraction]


def format_float(value: float, digits: int | None = None) -> str:
    """
    Format a real number with a fixed count of significant digits

    Args:
        value: Real number
        digits: Significant digits (defaults to settings.CSV_DIGITS)

    Returns:
        str: Scientific notation string, negative zero printed as zero
    """
    digits = settings.CSV_DIGITS if digits is None else digits
    value = float(value)
    if value == 0.0:
        value = 0.0  # drops the sign of -0.0
    return f"{value:.{digits - 1}e}"


def format_rational(value: Fraction) -> str:
    """Exact 'num/den' string, never a float"""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: Union[str, int, Fraction]) -> Fraction:
    """
    Parse '3/2', '2' or '1.5' into an exact Fraction

    Raises:
        ValueError: if the text is not a rational number
    """
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def parse_complex(text: Union[str, Number]) -> complex:
    """Parse '2', '1+1j' or '1+1i' into a complex number"""
    if isinstance(text, (int, float, complex)):
        return complex(text)
    cleaned = str(text).strip().replace(" ", "").replace("i", "j")
    try:
        return complex(cleaned)
    except ValueError as exc:
        raise ValueError(f"not a complex number: {text!r}") from exc


def parse_amplitude(value: Any) -> complex:
    """A JSON amplitude: a number or a [re, im] pair"""
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise ValueError(f"complex amplitude needs [re, im], got {value!r}")
        return complex(float(value[0]), float(value[1]))
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValueError(f"amplitude must be a number or [re, im], got {value!r}")
    return complex(value)


def rows_to_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """
    Render a table as CSV with a header row and '\\n' line endings.

    Floats are formatted with format_float, Fractions with format_rational,
    everything else with str.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(v) for v in row])
    return buffer.getvalue()


def _cell(value: Any) -> str:
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (float, np.floating)):
        return format_float(value)
    if isinstance(value, (complex, np.complexfloating)):
        return f"{format_float(value.real)}{'+' if value.imag >= 0 else '-'}{format_float(abs(value.imag))}i"
    return str(value)


def matrix_to_csv(m: np.ndarray) -> str:
    """Matrix dump: one row per matrix row, a (re, im) column pair per entry"""
    m = np.asarray(m, dtype=np.complex128)
    header = [f"c{j + 1}_{part}" for j in range(m.shape[1]) for part in ("re", "im")]
    rows = (
        [format_float(part) for z in row for part in (z.real, z.imag)] for row in m
    )
    return rows_to_csv(header, rows)


def matrix_to_json(m: np.ndarray) -> dict[str, Any]:
    """{"rows", "cols", "entries": [[[re, im], ...], ...]} with exact float reprs"""
    m = np.asarray(m, dtype=np.complex128)
    return {
        "rows": int(m.shape[0]),
        "cols": int(m.shape[1]),
        "entries": [[[float(z.real), float(z.imag)] for z in row] for row in m],
    }


def matrix_from_json(payload: dict[str, Any]) -> np.ndarray:
    """Inverse of matrix_to_json"""
    entries = payload["entries"]
    m = np.array([[complex(re, im) for re, im in row] for row in entries], dtype=np.complex128)
    if m.shape != (payload["rows"], payload["cols"]):
        raise ValueError(f"shape {m.shape} does not match the declared size")
    return m


def dump_json(payload: Any) -> str:
    """Deterministic JSON text with a trailing newline"""
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def pretty_matrix(m: np.ndarray, precision: int = 6) -> str:
    m = np.asarray(m)
    if np.all(np.abs(m.imag) == 0):
        m = m.real
    return np.array2string(m, precision=precision, suppress_small=True) + "\n"
