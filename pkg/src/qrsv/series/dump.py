from __future__ import annotations

from collections.abc import Mapping
from fractions import Fraction

from qrsv.series.core import QSeries


def format_exponent(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def dump_lines(series: QSeries, header: Mapping[str, str] | None = None) -> list[str]:
    """``# KEY VALUE`` header lines, ``EXPONENT COEFFICIENT`` per term, then the window."""
    lines = [f"# {key} {value}" for key, value in (header or {}).items()]
    lines.extend(f"{format_exponent(e)} {c}" for e, c in series.terms())
    lines.append(f"# valid_through {format_exponent(series.valid_through)}")
    return lines


def dump_series(series: QSeries, header: Mapping[str, str] | None = None) -> str:
    return "\n".join(dump_lines(series, header)) + "\n"


def parse_dump(text: str) -> QSeries:
    """Inverse of :func:`dump_series`; header lines are skipped."""
    terms: dict[Fraction, int] = {}
    window: Fraction | None = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            key, _, value = line[1:].strip().partition(" ")
            if key == "valid_through":
                window = Fraction(value.strip())
            continue
        exponent, coefficient = line.split()
        terms[Fraction(exponent)] = int(coefficient)
    if window is None:
        raise ValueError("series dump has no valid_through trailer")
    return QSeries.from_terms(terms, window)
