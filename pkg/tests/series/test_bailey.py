from __future__ import annotations

import pytest

from qrsv.series.bailey import (
    BP1,
    BP2,
    BP3,
    BaileyPair,
    LovejoyShape,
    SlaterId,
    bailey_sum,
    bp_alpha,
    bp_beta,
    lovejoy_lhs,
    lovejoy_rhs,
    slater_sides,
    verify_bailey,
)
from qrsv.series.core import equal_to_order


@pytest.mark.parametrize("pair", [BP1, BP2, BP3], ids=str)
def test_pairs_satisfy_the_bailey_relation(pair: BaileyPair) -> None:
    outcome = verify_bailey(pair, 8, 30)
    assert outcome.passed, outcome


@pytest.mark.parametrize("which", list(SlaterId))
@pytest.mark.parametrize("n", range(7))
def test_finite_slater_sides_agree(which: SlaterId, n: int) -> None:
    lhs, rhs = slater_sides(which, n, 30)
    assert equal_to_order(lhs, rhs, 30).passed


@pytest.mark.parametrize("shape", list(LovejoyShape))
def test_lovejoy_transform_preserves_the_double_sum(shape: LovejoyShape) -> None:
    pair_a, pair_z = shape.pairs
    lhs = lovejoy_lhs(pair_a, pair_z, 30)
    rhs = lovejoy_rhs(pair_a, pair_z, 30)
    assert equal_to_order(lhs, rhs, 30).passed


def test_alpha_sequences_have_expected_zeros() -> None:
    assert BP1.alpha_parts(0).numerator == ((1, 0),)
    assert BP2.alpha_parts(1).is_zero
    assert BP3.alpha_parts(2).is_zero
    assert not BP3.alpha_parts(3).is_zero


def test_beta_is_a_reciprocal_pochhammer() -> None:
    assert BP1.beta_length(2) == 4
    assert BP3.beta_length(2) == 5
    beta = bp_beta(BP1, 1, 6)
    assert [beta.coefficient(n) for n in range(6)] == [1, 1, 2, 2, 3, 3]


def test_bailey_sum_at_zero_is_alpha_zero() -> None:
    assert bailey_sum(BP1, 0, 10) == bp_beta(BP1, 0, 10)


def test_negative_index_is_rejected() -> None:
    with pytest.raises(ValueError, match="nonnegative"):
        BP1.alpha_parts(-1)
    with pytest.raises(ValueError, match="nonnegative"):
        bp_beta(BP2, -1, 10)


def test_transform_needs_a_shifted_second_pair() -> None:
    with pytest.raises(ValueError, match="positive power of q"):
        lovejoy_rhs(BP2, BP1, 10)


def test_alpha_series() -> None:
    assert list(bp_alpha(BP1, 1, 10).terms()) == [(1, -1)]
    geometric = bp_alpha(BP3, 0, 5)
    assert [geometric.coefficient(n) for n in range(5)] == [1] * 5
