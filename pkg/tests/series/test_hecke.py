from __future__ import annotations

import random
from fractions import Fraction

import pytest

from qrsv.series.core import Monomial, QSeries, equal_to_order
from qrsv.series.hecke import HeckeSpec, hecke_f, hecke_f_bruteforce


@pytest.mark.parametrize(
    ("a", "b", "c", "x", "y", "m"),
    [
        (2, 3, 2, Monomial.q(4, -1), Monomial.q(5, -1), 3),
        (2, 3, 2, Monomial.q(1, -1), Monomial.q(2), 1),
        (1, 2, 1, Monomial.q(3), Monomial.q(1, -1), 1),
        (1, 2, 1, Monomial.q(2, -1), Monomial.q(2, -1), 3),
        (2, 3, 2, Monomial.q(Fraction(1, 2), -1), Monomial.q(1, -1), 1),
    ],
)
def test_row_scan_matches_bruteforce(
    a: int, b: int, c: int, x: Monomial, y: Monomial, m: int
) -> None:
    spec = HeckeSpec(a, b, c, x, y, Fraction(m))
    assert hecke_f(spec, 40) == hecke_f_bruteforce(spec, 40, radius=40)


def test_row_scan_matches_bruteforce_for_random_specs() -> None:
    rng = random.Random(20240612)
    for _ in range(10):
        spec = HeckeSpec(
            rng.randint(1, 3),
            rng.randint(1, 4),
            rng.randint(1, 3),
            Monomial.q(rng.randint(-2, 5), rng.choice((1, -1))),
            Monomial.q(rng.randint(-2, 5), rng.choice((1, -1))),
            Fraction(rng.randint(1, 3)),
        )
        assert hecke_f(spec, 40) == hecke_f_bruteforce(spec, 40, radius=40), spec


def test_symmetric_spec_is_symmetric_in_x_and_y() -> None:
    spec = HeckeSpec(2, 3, 2, Monomial.q(4, -1), Monomial.q(7, -1), Fraction(3))
    assert hecke_f(spec, 60) == hecke_f(spec.swapped(), 60)


def test_shift_relation_for_f232() -> None:
    lhs = hecke_f(HeckeSpec(2, 3, 2, Monomial.q(4, -1), Monomial.q(5, -1), Fraction(3)), 60)
    inner = HeckeSpec(2, 3, 2, Monomial.q(17, -1), Monomial.q(16, -1), Fraction(3))
    rhs = -hecke_f(inner, 48).shift(12)
    assert equal_to_order(lhs, rhs, 60).passed


def test_constant_term_is_one() -> None:
    series = hecke_f(HeckeSpec(2, 3, 2, Monomial.q(4, -1), Monomial.q(5, -1), Fraction(3)), 5)
    assert series.coefficient(0) == 1
    assert series.valid_through == 5


def test_spec_rejects_non_positive_diagonal() -> None:
    with pytest.raises(ValueError, match="a > 0 and c > 0"):
        HeckeSpec(0, 1, 1, Monomial.q(1), Monomial.q(1))
    with pytest.raises(ValueError, match="base exponent must be positive"):
        HeckeSpec(1, 2, 1, Monomial.q(1), Monomial.q(1), Fraction(0))


def test_empty_window_gives_zero_series() -> None:
    spec = HeckeSpec(2, 3, 2, Monomial.q(4, -1), Monomial.q(5, -1), Fraction(3))
    assert hecke_f(spec, 0) == QSeries.zero(0)
