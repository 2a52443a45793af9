from __future__ import annotations

import random
from collections import Counter
from fractions import Fraction

import pytest

from qrsv.series.core import Monomial, QSeries, equal_to_order, through_order
from qrsv.series.errors import EmptyWindow, InsufficientOrder, NonUnitLead


def _geometric(valid_through: int) -> QSeries:
    return QSeries.from_terms({n: 1 for n in range(valid_through)}, valid_through)


def test_one_minus_q_times_geometric_is_one() -> None:
    one_minus_q = QSeries.from_terms({0: 1, 1: -1}, 10)
    assert one_minus_q * _geometric(10) == QSeries.one(10)


def test_invert_one_minus_q_gives_geometric_series() -> None:
    one_minus_q = QSeries.from_terms({0: 1, 1: -1}, 10)
    assert one_minus_q.invert() == _geometric(10)


def test_product_window_follows_lowest_terms() -> None:
    a = QSeries.from_terms({2: 1}, 5)
    b = QSeries.from_terms({0: 1, 1: 1}, 3)
    product = a * b
    assert product.valid_through == 5
    assert list(product.terms()) == [(Fraction(2), 1), (Fraction(3), 1)]


def test_sum_window_is_the_smaller_window() -> None:
    a = QSeries.from_terms({0: 1}, 7)
    b = QSeries.from_terms({1: 2}, 4)
    assert (a + b).valid_through == 4
    assert (a - b).coefficient(1) == -2


def test_shift_moves_terms_and_window() -> None:
    shifted = QSeries.one(4).shift(3)
    assert shifted.lead == 3
    assert shifted.valid_through == 7


def test_shift_by_fraction_refines_scale() -> None:
    shifted = QSeries.one(4).shift(Fraction(1, 2))
    assert shifted.scale == 2
    assert shifted.coefficient(Fraction(1, 2)) == 1
    assert shifted.valid_through == Fraction(9, 2)


def test_rescale_substitutes_power_of_q() -> None:
    series = QSeries.from_terms({0: 1, 1: 1}, 10).rescale(Fraction(1, 2))
    assert list(series.terms()) == [(Fraction(0), 1), (Fraction(1, 2), 1)]
    assert series.valid_through == 5


def test_rescale_rejects_non_positive_factor() -> None:
    with pytest.raises(ValueError, match="must be positive"):
        QSeries.one(5).rescale(0)


def test_coefficient_beyond_window_raises() -> None:
    series = QSeries.from_terms({0: 1}, 3)
    assert series.coefficient(2) == 0
    with pytest.raises(InsufficientOrder, match="beyond the valid window") as info:
        series.coefficient(3)
    assert info.value.available == 3


def test_invert_requires_unit_lead() -> None:
    with pytest.raises(NonUnitLead, match="not a unit"):
        QSeries.from_terms({0: 2, 1: 1}, 5).invert()


def test_invert_of_empty_window_raises() -> None:
    with pytest.raises(EmptyWindow):
        QSeries.zero(5).invert()


def test_invert_with_negative_lead_shrinks_window() -> None:
    series = QSeries.from_terms({-1: 1, 0: -1}, 5)
    inverse = series.invert()
    assert inverse.valid_through == 7
    assert inverse.lead == 1
    assert series * inverse == QSeries.one(6)


def test_truncate_only_narrows() -> None:
    series = _geometric(10)
    assert series.truncate(4).valid_through == 4
    assert series.truncate(20) is series


def test_str_lists_terms_and_remainder() -> None:
    series = QSeries.from_terms({0: 1, 1: -2}, 3)
    assert str(series) == "1 - 2*q + O(q^3)"
    assert str(Monomial.q(Fraction(1, 2), -1)) == "-q^(1/2)"


def test_monomial_algebra() -> None:
    x = Monomial.q(3, -1)
    assert x * Monomial.q(-1) == Monomial.q(2, -1)
    assert x.inverse() == Monomial.q(-3, -1)
    assert x**2 == Monomial.q(6)


def test_monomial_rejects_bad_sign() -> None:
    with pytest.raises(ValueError, match="sign must be"):
        Monomial(2, Fraction(1))


def test_equal_to_order_reports_first_mismatch() -> None:
    a = QSeries.from_terms({0: 1, 1: 1, 2: 2}, 5)
    b = QSeries.from_terms({0: 1, 1: 1, 2: 3}, 5)
    outcome = equal_to_order(a, b, 5)
    assert not outcome.passed
    assert outcome.mismatch is not None
    assert outcome.mismatch.exponent == 2
    assert (outcome.mismatch.lhs, outcome.mismatch.rhs) == (2, 3)


def test_equal_to_order_ignores_terms_at_or_above_order() -> None:
    a = QSeries.from_terms({0: 1, 4: 1}, 6)
    b = QSeries.from_terms({0: 1}, 6)
    assert equal_to_order(a, b, 4).passed
    assert not equal_to_order(a, b, 5).passed


def test_equal_to_order_needs_both_windows() -> None:
    with pytest.raises(InsufficientOrder, match="needs both sides"):
        equal_to_order(QSeries.one(3), QSeries.one(10), 5)


def test_through_order_retries_with_more_padding() -> None:
    calls: list[Fraction] = []

    def build(working: Fraction) -> QSeries:
        calls.append(working)
        return QSeries.one(working - 15)

    series = through_order(build, 20)
    assert calls == [Fraction(30), Fraction(40)]
    assert series.valid_through == 20


def test_through_order_gives_up_after_retries() -> None:
    with pytest.raises(InsufficientOrder, match="after 4 retries"):
        through_order(lambda working: QSeries.one(working - 1000), 20)


def _random_polynomial(rng: random.Random) -> dict[int, int]:
    low = rng.randint(-3, 3)
    terms = {low: rng.choice((-2, -1, 1, 2))}
    for e in range(low + 1, low + rng.randint(1, 10)):
        coeff = rng.randint(-4, 4)
        if coeff:
            terms[e] = coeff
    return terms


def _known_part(poly: dict[int, int], rng: random.Random) -> QSeries:
    valid_through = min(poly) + rng.randint(1, 12)
    return QSeries.from_terms({e: c for e, c in poly.items() if e < valid_through}, valid_through)


def _exact_product(p: dict[int, int], r: dict[int, int]) -> Counter[int]:
    out: Counter[int] = Counter()
    for ep, cp in p.items():
        for er, cr in r.items():
            out[ep + er] += cp * cr
    return out


def test_arithmetic_is_sound_on_random_truncations() -> None:
    rng = random.Random(20240614)
    for _ in range(200):
        p, r = _random_polynomial(rng), _random_polynomial(rng)
        a, b = _known_part(p, rng), _known_part(r, rng)
        product = a * b
        exact = _exact_product(p, r)
        for e in range(-10, int(product.valid_through)):
            assert product.coefficient(e) == exact[e]
        total = a + b
        for e in range(-10, int(total.valid_through)):
            assert total.coefficient(e) == p.get(e, 0) + r.get(e, 0)
        assert a * b == b * a
        assert a + b == b + a
        assert a - a == QSeries.zero(a.valid_through)


def test_ring_axioms_on_random_truncations() -> None:
    rng = random.Random(20240615)
    for _ in range(200):
        a, b, c = (_known_part(_random_polynomial(rng), rng) for _ in range(3))
        left = (a + b) * c
        right = a * c + b * c
        window = min(left.valid_through, right.valid_through)
        assert equal_to_order(left, right, window).passed
        assoc_left, assoc_right = (a * b) * c, a * (b * c)
        window = min(assoc_left.valid_through, assoc_right.valid_through)
        assert equal_to_order(assoc_left, assoc_right, window).passed
        if a.lead is not None and abs(a.coefficient(a.lead)) == 1:
            unit = a * a.invert()
            assert equal_to_order(unit, QSeries.one(unit.valid_through), unit.valid_through).passed
