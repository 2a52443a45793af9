from __future__ import annotations

from fractions import Fraction

import pytest

from qrsv.eval import EvaluationFailure, evaluate_text
from qrsv.series.core import QSeries, equal_to_order

PENTAGONAL = {0: 1, 1: -1, 2: -1, 5: 1, 7: 1, 12: -1, 15: -1, 22: 1, 26: 1}


def test_q_plus_q() -> None:
    assert evaluate_text("q + q", 5) == QSeries.from_terms({1: 2}, 5)


def test_division_expands_geometric_series() -> None:
    series = evaluate_text("1/(1 - q)", 6)
    assert [series.coefficient(n) for n in range(6)] == [1] * 6
    assert series.valid_through == 6


def test_infinite_pochhammer_is_euler_product() -> None:
    assert evaluate_text("poch(q; 1; inf)", 30) == QSeries.from_terms(PENTAGONAL, 30)


def test_base_accepts_q_power_or_exponent() -> None:
    assert evaluate_text("poch(q; q; 3)", 10) == evaluate_text("poch(q; 1; 3)", 10)
    assert evaluate_text("j(-q; q^2)", 20) == evaluate_text("Jbar(1,2)", 20)


def test_reciprocal_pochhammer() -> None:
    series = evaluate_text("pochn(2)", 6)
    assert [series.coefficient(n) for n in range(6)] == [1, 1, 2, 2, 3, 3]


def test_theta_shorthands_agree() -> None:
    assert evaluate_text("J(1,3) - Jm(1)", 20).is_zero()


def test_nahm_sum_matches_rogers_ramanujan_product() -> None:
    lhs = evaluate_text('nahm("A=[[2]] B=[0]")', 30)
    rhs = evaluate_text("poch(q, q^4; 5; inf)^-1", 30)
    assert equal_to_order(lhs, rhs, 30).passed


def test_hecke_shift_relation_cancels() -> None:
    text = "f(2,3,2; -q^4, -q^5; q^3) + q^12*f(2,3,2; -q^17, -q^16; q^3)"
    assert evaluate_text(text, 40).is_zero()


def test_appell_shift_in_x_cancels() -> None:
    text = "m(-q^23; q^30; q^8) - 1 - q^-7*m(-q^-7; q^30; q^8)"
    assert evaluate_text(text, 30).is_zero()


def test_subs_reads_a_series_at_a_root_of_q() -> None:
    series = evaluate_text("subs(q; 1/2)", 5)
    assert list(series.terms()) == [(Fraction(1, 2), 1)]
    assert series.valid_through == 5


def test_monomial_products_stay_exact() -> None:
    series = evaluate_text("q^(1/2) * q^(1/2) - q", 5)
    assert series.is_zero()


@pytest.mark.parametrize(
    ("text", "message"),
    [
        ("foo(q)", "unknown function `foo`"),
        ("1/2", "is not a series"),
        ("poch(q; 1)", "wrong arguments for `poch`"),
        ("1/(2 + q)", "not a unit"),
        ("inf", "only valid as the length"),
        ("subs(q; -1)", "must be positive"),
        ('nahm("A=[[2]]")', "missing `B`"),
        ("m(-q; q^30; q^30)", "vanishes"),
    ],
)
def test_evaluation_errors_are_diagnostics(text: str, message: str) -> None:
    with pytest.raises(EvaluationFailure) as info:
        evaluate_text(text, 10)
    assert info.value.diagnostic.code == "QRSV2001"
    assert message in info.value.diagnostic.message


def test_call_errors_show_the_signature() -> None:
    with pytest.raises(EvaluationFailure) as info:
        evaluate_text("poch(q; 1)", 10)
    assert info.value.diagnostic.help == ["`poch` is called as `poch(a, ...; m; inf|n)`."]


def test_order_must_be_positive() -> None:
    with pytest.raises(ValueError, match="must be positive"):
        evaluate_text("q", 0)
