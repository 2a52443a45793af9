from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction

from qrsv.series._scan import safety_radius, scan_rows
from qrsv.series.core import Monomial, QSeries, RationalLike, as_fraction, index_window, scale_for
from qrsv.series.errors import NonUnitLead, PoleError
from qrsv.series.qfunctions import ThetaSpec, jtheta, jtheta_product, theta_quotient

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class AppellSpec:
    """``m(x, q^p, z)``."""

    x: Monomial
    p: Fraction
    z: Monomial

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", as_fraction(self.p))
        if self.p <= 0:
            raise ValueError(f"Appell-Lerch base exponent must be positive, got {self.p}")

    @property
    def theta(self) -> ThetaSpec:
        return ThetaSpec(self.z, self.p)

    def pole_exponent(self, r: int) -> Fraction:
        """Exponent ``e_r`` of ``q^(p(r-1)) x z`` in the denominator of term ``r``."""
        return self.p * (r - 1) + self.x.exponent + self.z.exponent

    def base_exponent(self, r: int) -> Fraction:
        return self.p * r * (r - 1) / 2 + self.z.exponent * r

    def term_minimum(self, r: int) -> Fraction:
        return self.base_exponent(r) + max(Fraction(0), -self.pole_exponent(r))

    def __str__(self) -> str:
        return f"m({self.x}, q^{self.p}, {self.z})"


def _check_generic(spec: AppellSpec) -> None:
    if spec.theta.is_zero():
        raise PoleError(f"{spec}: j(z; q^{spec.p}) vanishes since z is a power of q^{spec.p}")


def appell_sum(spec: AppellSpec, valid_through: RationalLike) -> QSeries:
    """The bilateral sum of ``m`` before division by ``j(z; q^p)``."""
    window = as_fraction(valid_through)
    sign = spec.x.sign * spec.z.sign
    scale = scale_for(window, spec.p, spec.x.exponent, spec.z.exponent)
    coeffs: dict[int, int] = {}

    def visit(r: int) -> None:
        pole = spec.pole_exponent(r)
        if pole == 0:
            if sign == 1:
                raise PoleError(f"{spec}: term {r} has denominator 1 - q^0")
            raise NonUnitLead(f"{spec}: term {r} has denominator 2")
        lead_sign = (-spec.z.sign) ** (r % 2)
        exponent = spec.base_exponent(r)
        if pole > 0:
            k, step, factor = 0, pole, 1
        else:
            k, step, factor = 1, -pole, -1
        while True:
            e = exponent + k * step
            if e >= window:
                break
            key = int(e * scale)
            coeffs[key] = coeffs.get(key, 0) + factor * lead_sign * sign ** (k % 2)
            k += 1

    radius = safety_radius(window, spec.p, spec.x.exponent + spec.z.exponent)
    scan_rows(0, 1, spec.term_minimum, visit, window, radius, what=str(spec))
    scan_rows(-1, -1, spec.term_minimum, visit, window, radius, what=str(spec))
    return QSeries(coeffs, index_window(window, scale), scale)


def _divide_by_theta(
    spec: AppellSpec,
    partial: QSeries,
    window: Fraction,
    theta_fn: Callable[[ThetaSpec, Fraction], QSeries],
) -> QSeries:
    theta_lead = spec.theta.lead()
    assert theta_lead is not None
    lead = partial.lead
    if lead is None:
        return QSeries.zero(window, partial.scale)
    relative = window + theta_lead - lead
    theta = theta_fn(spec.theta, theta_lead + relative).shift(-theta_lead)
    LOGGER.debug("%s: sum lead q^%s, theta lead q^%s", spec, lead, theta_lead)
    return (partial.shift(-theta_lead) * theta.invert()).truncate(window)


def appell_m(spec: AppellSpec, valid_through: RationalLike) -> QSeries:
    """Truncated ``m(x, q^p, z)`` exact below ``valid_through``."""
    window = as_fraction(valid_through)
    _check_generic(spec)
    theta_lead = spec.theta.lead()
    assert theta_lead is not None
    partial = appell_sum(spec, window + theta_lead)
    return _divide_by_theta(spec, partial, window, jtheta)


def appell_m_direct(spec: AppellSpec, valid_through: RationalLike, radius: int) -> QSeries:
    """Sum ``r`` over ``[-radius, radius]`` inverting each denominator as a series."""
    window = as_fraction(valid_through)
    _check_generic(spec)
    theta_lead = spec.theta.lead()
    assert theta_lead is not None
    reach = window + theta_lead
    sign = spec.x.sign * spec.z.sign
    scale = scale_for(reach, spec.p, spec.x.exponent, spec.z.exponent)
    partial = QSeries.zero(reach, scale)
    for r in range(-radius, radius + 1):
        pole = spec.pole_exponent(r)
        if pole == 0:
            raise PoleError(f"{spec}: term {r} has denominator 1 - q^0")
        if spec.term_minimum(r) >= reach:
            continue
        base = spec.base_exponent(r)
        numerator = Monomial((-spec.z.sign) ** (r % 2), base)
        target = reach - base + (2 * pole if pole < 0 else 0)
        denominator = QSeries.one(target, scale) - Monomial(sign, pole).series(scale, target)
        partial = partial + denominator.invert() * numerator
    return _divide_by_theta(spec, partial, window, jtheta_product)


def m_difference(
    x: Monomial,
    p: RationalLike,
    z0: Monomial,
    z1: Monomial,
    valid_through: RationalLike,
) -> QSeries:
    """Theta quotient equal to ``m(x, q^p, z1) - m(x, q^p, z0)``."""
    base = as_fraction(p)
    euler = ThetaSpec.euler(base)
    return theta_quotient(
        z0,
        [euler, euler, euler, ThetaSpec(z1 / z0, base), ThetaSpec(x * z0 * z1, base)],
        [
            ThetaSpec(z0, base),
            ThetaSpec(z1, base),
            ThetaSpec(x * z0, base),
            ThetaSpec(x * z1, base),
        ],
        valid_through,
    )


def _theta_times_appell(
    prefactor: Monomial, theta: ThetaSpec, spec: AppellSpec, window: Fraction
) -> QSeries:
    theta_lead = theta.lead()
    if theta_lead is None:
        return QSeries.zero(window)
    target = window - prefactor.exponent
    appell = appell_m(spec, target - theta_lead)
    theta_series = jtheta(theta, target - appell.lower_bound())
    return (theta_series * appell).times_monomial(prefactor).truncate(window)


def f232_via_appell(
    x: Monomial,
    y: Monomial,
    base: RationalLike,
    ell: int,
    valid_through: RationalLike,
) -> QSeries:
    """``f_{2,3,2}(x, y, q^base)`` rewritten through Appell-Lerch sums.

    The expansion holds for every integer ``ell`` at generic ``x`` and ``y``.
    """
    window = as_fraction(valid_through)
    b = as_fraction(base)
    total = QSeries.zero(window)
    for r in (0, 1):
        for u, w, shift in ((x, y, 2 * ell), (y, x, -2 * ell)):
            prefactor = (u / w) ** r * Monomial.q(-b * r * r)
            theta = ThetaSpec(w * Monomial.q(b * r), 2 * b)
            spec = AppellSpec(
                x=Monomial.q(b * (6 - 5 * r)) * u**2 / w**3,
                p=10 * b,
                z=Monomial.q(b * shift) * w**2 / u**2,
            )
            total = total + _theta_times_appell(prefactor, theta, spec, window)
    return total
