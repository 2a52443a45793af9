from __future__ import annotations

from fractions import Fraction

import pytest

from qrsv.series.core import QSeries
from qrsv.series.dump import dump_series, parse_dump


def test_dump_writes_terms_then_window() -> None:
    series = QSeries.from_terms({0: 1, Fraction(1, 2): -2}, 3)
    assert dump_series(series) == "0 1\n1/2 -2\n# valid_through 3\n"


def test_parse_dump_reads_back_the_series() -> None:
    series = QSeries.from_terms({-1: 3, Fraction(5, 2): 1}, Fraction(7, 2))
    assert parse_dump(dump_series(series)) == series


def test_parse_dump_requires_trailer() -> None:
    with pytest.raises(ValueError, match="no valid_through trailer"):
        parse_dump("0 1\n")


def test_header_lines_come_first_and_are_skipped_on_read() -> None:
    series = QSeries.from_terms({0: 1, 1: 1}, 2)
    text = dump_series(series, {"C": "1/20"})
    assert text == "# C 1/20\n0 1\n1 1\n# valid_through 2\n"
    assert parse_dump(text) == series
