from __future__ import annotations

from fractions import Fraction

import pytest

from qrsv.checks import (
    CheckStatus,
    IdentityCheck,
    SidePair,
    UnknownCheck,
    check_ids,
    get_check,
    run_all,
    run_check,
    run_identity,
)
from qrsv.checks.builders import Expression


@pytest.mark.parametrize(
    ("check_id", "order"),
    [("rr1", 30), ("rr2", 30), ("conj1", 20), ("conj2", 20), ("sprod", 10), ("snd1", 30),
     ("mid3", 30), ("slater1", 10), ("bp1", 12)],
)
def test_checks_pass_at_small_orders(check_id: str, order: int) -> None:
    report = run_check(check_id, order)
    assert report.status is CheckStatus.PASS, report.message
    assert report.order == order
    assert report.window == order
    assert report.mismatch is None


def test_default_order_comes_from_the_catalogue() -> None:
    report = run_check("rr1")
    assert report.order == get_check("rr1").default_order == 100
    assert report.passed


def test_perturbed_rhs_fails_at_the_perturbed_exponent() -> None:
    report = run_identity(get_check("rr1").perturbed(7), 30)
    assert report.status is CheckStatus.FAIL
    assert report.mismatch is not None
    assert report.mismatch.exponent == 7
    assert (report.mismatch.lhs, report.mismatch.rhs) == (3, 4)
    assert report.label is None


def test_perturbed_product_fails_for_the_nahm_sum() -> None:
    report = run_identity(get_check("conj1").perturbed(7), 20)
    assert report.status is CheckStatus.FAIL
    assert report.mismatch is not None
    assert report.mismatch.exponent == 7
    assert report.mismatch.rhs == report.mismatch.lhs + 1


def test_failing_pair_label_is_reported() -> None:
    report = run_identity(get_check("wz").perturbed(3, delta=-2), 20)
    assert report.status is CheckStatus.FAIL
    assert report.label == "v=(1,0)"
    payload = report.to_dict()
    assert payload["status"] == "fail"
    assert payload["mismatch"]["exponent"] == "3"
    assert payload["mismatch"]["pair"] == "v=(1,0)"


def test_engine_errors_become_error_reports() -> None:
    check = IdentityCheck(
        id="broken",
        description="division by a non-unit",
        anchor="none",
        default_order=Fraction(10),
        pairs=(SidePair("", Expression("1/(2 + q)"), Expression("1")),),
    )
    report = run_identity(check)
    assert report.status is CheckStatus.ERROR
    assert report.message is not None
    assert "not a unit" in report.message
    assert report.to_dict()["message"] == report.message


def test_order_must_be_positive() -> None:
    with pytest.raises(ValueError, match="must be positive"):
        run_check("rr1", 0)


def test_unknown_check_id() -> None:
    with pytest.raises(UnknownCheck, match="unknown check `nosuch`") as info:
        get_check("nosuch")
    assert info.value.check_id == "nosuch"
    with pytest.raises(UnknownCheck):
        run_all(only=["rr1", "nosuch"])
    with pytest.raises(UnknownCheck):
        run_all(only=["rr1"], overrides={"nosuch": Fraction(5)})


def test_run_all_keeps_catalogue_order() -> None:
    reports = run_all(order=20, only=["rr2", "rr1", "rr2"])
    assert [report.id for report in reports] == ["rr1", "rr2"]
    assert all(report.passed for report in reports)


def test_overrides_win_over_the_global_order() -> None:
    reports = run_all(order=20, overrides={"rr1": Fraction(15)}, only=["rr1", "rr2"])
    assert [report.order for report in reports] == [15, 20]


def test_process_pool_gives_the_same_reports() -> None:
    serial = run_all(order=20, only=["rr1", "rr2"])
    pooled = run_all(order=20, only=["rr1", "rr2"], jobs=2)
    assert [(r.id, r.status, r.window) for r in pooled] == [
        (r.id, r.status, r.window) for r in serial
    ]


@pytest.mark.slow
@pytest.mark.parametrize("check_id", check_ids())
def test_every_check_detects_a_single_coefficient_change(check_id: str) -> None:
    check = get_check(check_id)
    order = min(check.default_order, Fraction(40))
    report = run_identity(check.perturbed(7), order)
    assert report.status is CheckStatus.FAIL, report.message
    assert report.mismatch is not None
    assert report.mismatch.exponent == 7
    assert report.mismatch.rhs - report.mismatch.lhs == 1


def _half_power_check(scale: int) -> IdentityCheck:
    return IdentityCheck(
        id="half",
        description="a square-root power against itself",
        anchor="none",
        default_order=Fraction(5),
        pairs=(SidePair("", Expression("q^(1/2)"), Expression("q^(1/2)")),),
        scale=scale,
    )


def test_sides_must_fit_the_declared_scale() -> None:
    report = run_identity(_half_power_check(1))
    assert report.status is CheckStatus.ERROR
    assert report.message is not None
    assert "need scale 2" in report.message
    assert run_identity(_half_power_check(2)).status is CheckStatus.PASS
