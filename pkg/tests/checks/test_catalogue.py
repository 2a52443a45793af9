from __future__ import annotations

import pytest

from qrsv.checks import CheckStatus, catalogue, check_ids, list_checks, run_all
from qrsv.checks.builders import Expression
from qrsv.parse import parse_expr


def test_ids_are_unique_and_stably_ordered() -> None:
    ids = check_ids()
    assert len(ids) == len(set(ids))
    assert ids[:7] == ["rr1", "rr2", "wz", "conj1", "conj2", "sprod", "tprod"]
    assert ids[-1] == "snd5"


def test_every_layer_is_catalogued() -> None:
    ids = set(check_ids())
    expected = {
        "slater1", "slater2", "bp1", "bp2", "bp3", "lovejoyS", "lovejoyT",
        "slem", "tlem", "f232ell", "fid0", "mminus", "s1w", "t1m", "sproof", "tproof",
        "kl1", "kl2", "equiv1", "equiv2",
    }
    expected |= {f"f232exp-{i}" for i in range(1, 8)}
    expected |= {f"mid{i}" for i in range(1, 5)}
    expected |= {f"w{i}" for i in range(1, 9)} | {f"m{i}" for i in range(1, 9)}
    expected |= {f"snd{i}" for i in range(1, 6)}
    assert expected <= ids


def test_list_checks_carries_descriptions_and_anchors() -> None:
    for check_id, description, anchor in list_checks():
        assert check_id
        assert description
        assert anchor


def test_every_check_has_pairs_and_a_positive_order() -> None:
    for check in catalogue():
        assert check.pairs, check.id
        assert check.default_order > 0, check.id


def test_half_integer_checks_use_scale_two() -> None:
    scales = {check.id: check.scale for check in catalogue()}
    assert scales["sprod"] == scales["tprod"] == 2
    assert scales["rr1"] == 1


def test_theta_pairs_without_a_middle_form_use_one_pair() -> None:
    by_id = {check.id: check for check in catalogue()}
    assert [pair.label for pair in by_id["w1"].pairs] == ["functional equations", "theta quotient"]
    assert [pair.label for pair in by_id["m5"].pairs] == ["definition"]


def test_expression_sides_parse() -> None:
    for check in catalogue():
        for pair in check.pairs:
            for side in (pair.lhs, pair.rhs):
                if isinstance(side, Expression):
                    parse_expr(side.text, check.id)


@pytest.mark.slow
def test_catalogue_passes_at_default_orders() -> None:
    reports = run_all(jobs=4)
    failed = [(r.id, r.status, r.mismatch, r.message) for r in reports if not r.passed]
    assert failed == []
    assert all(r.status is CheckStatus.PASS for r in reports)
