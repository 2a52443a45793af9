from __future__ import annotations

import random

import pytest

from qrsv.series.appell import AppellSpec, appell_m, appell_m_direct, f232_via_appell, m_difference
from qrsv.series.core import Monomial, equal_to_order
from qrsv.series.errors import NonUnitLead, PoleError
from qrsv.series.hecke import HeckeSpec, hecke_f


@pytest.mark.parametrize(
    ("x", "p", "z"),
    [
        (Monomial.q(14, -1), 30, Monomial.q(6)),
        (Monomial.q(1, -1), 5, Monomial.q(2)),
        (Monomial.q(3, -1), 7, Monomial.q(-2)),
        (Monomial.q(2), 5, Monomial.q(1, -1)),
    ],
)
def test_closed_form_rows_match_direct_inversion(x: Monomial, p: int, z: Monomial) -> None:
    spec = AppellSpec(x, p, z)
    fast = appell_m(spec, 40)
    slow = appell_m_direct(spec, 40, radius=30)
    assert equal_to_order(fast, slow, 40).passed


def _generic_spec(rng: random.Random) -> AppellSpec:
    while True:
        p = rng.randint(3, 8)
        kx = rng.randint(-p + 1, p - 1)
        kz = rng.randint(1, p - 1) * rng.choice((1, -1))
        if (kx + kz) % p:
            return AppellSpec(
                Monomial.q(kx, rng.choice((1, -1))), p, Monomial.q(kz, rng.choice((1, -1)))
            )


def test_closed_form_rows_match_direct_inversion_for_random_generic_specs() -> None:
    rng = random.Random(20240613)
    for _ in range(10):
        spec = _generic_spec(rng)
        fast = appell_m(spec, 60)
        slow = appell_m_direct(spec, 60, radius=30)
        assert equal_to_order(fast, slow, 60).passed, spec


def test_difference_in_z_is_a_theta_quotient() -> None:
    x = Monomial.q(14, -1)
    z0, z1 = Monomial.q(8), Monomial.q(6)
    direct = appell_m(AppellSpec(x, 30, z1), 40) - appell_m(AppellSpec(x, 30, z0), 40)
    assert equal_to_order(direct, m_difference(x, 30, z0, z1, 40), 40).passed


@pytest.mark.parametrize("ell", [0, 1, 2])
def test_f232_expansion_matches_direct_sum(ell: int) -> None:
    x, y = Monomial.q(4, -1), Monomial.q(5, -1)
    direct = hecke_f(HeckeSpec(2, 3, 2, x, y, 3), 60)
    assert equal_to_order(f232_via_appell(x, y, 3, ell, 60), direct, 60).passed


def test_z_on_the_theta_lattice_is_a_pole() -> None:
    with pytest.raises(PoleError, match="vanishes"):
        appell_m(AppellSpec(Monomial.q(1, -1), 30, Monomial.q(30)), 20)


def test_denominator_two_is_reported() -> None:
    with pytest.raises(NonUnitLead, match="denominator 2"):
        appell_m(AppellSpec(Monomial.q(-6, -1), 30, Monomial.q(6)), 40)


def test_base_must_be_positive() -> None:
    with pytest.raises(ValueError, match="must be positive"):
        AppellSpec(Monomial.q(1), 0, Monomial.q(1))
