from __future__ import annotations

import math
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from qrsv.series import _dense
from qrsv.series.core import (
    Monomial,
    QSeries,
    RationalLike,
    as_fraction,
    index_window,
    scale_for,
)
from qrsv.series.errors import DivergentProduct, PoleError

Factor = tuple[int, Fraction]
"""A binomial ``1 - sign * q^exponent``."""


def binomial_product(factors: Iterable[Factor], valid_through: RationalLike) -> QSeries:
    """Expand a finite product of binomials exactly below ``valid_through``.

    Factors with a negative exponent are rewritten as
    ``-sign * q^e * (1 - sign * q^-e)``; a zero exponent contributes the scalar
    ``1 - sign``.
    """
    window = as_fraction(valid_through)
    sign = 1
    shift = Fraction(0)
    scalar = 1
    steps: list[Factor] = []
    for fsign, exponent in factors:
        if exponent > 0:
            steps.append((fsign, exponent))
        elif exponent == 0:
            scalar *= 1 - fsign
        else:
            sign *= -fsign
            shift += exponent
            steps.append((fsign, -exponent))
    scale = scale_for(window, shift, *(e for _, e in steps))
    if scalar == 0:
        return QSeries.zero(window, scale)
    width = index_window(window - shift, scale)
    offset = int(shift * scale)
    if width <= 0:
        return QSeries.zero(window, scale)
    buf = [0] * width
    buf[0] = sign * scalar
    for fsign, exponent in sorted(steps, key=lambda item: item[1]):
        step = int(exponent * scale)
        if step >= width:
            break
        _dense.multiply_binomial(buf, step, fsign)
    return QSeries.from_dense(buf, offset, offset + width, scale)


def _check_base(m: Fraction) -> None:
    if m <= 0:
        raise DivergentProduct(f"infinite product with base q^{m} does not converge")


def _poch_factors(a: Monomial, m: Fraction) -> Iterator[Factor]:
    k = 0
    while True:
        yield a.sign, a.exponent + m * k
        k += 1


def poch_product(
    parts: Sequence[tuple[Monomial, RationalLike]], valid_through: RationalLike
) -> QSeries:
    """Product of infinite Pochhammer symbols ``(a; q^m)_inf`` expanded together."""
    window = as_fraction(valid_through)
    bases = [(a, as_fraction(m)) for a, m in parts]
    for _, m in bases:
        _check_base(m)
    factors: list[Factor] = []
    shift = Fraction(0)
    pending: list[Iterator[Factor]] = []
    heads: list[Factor] = []
    for a, m in bases:
        gen = _poch_factors(a, m)
        head = next(gen)
        while head[1] <= 0:
            factors.append(head)
            shift += head[1]
            head = next(gen)
        pending.append(gen)
        heads.append(head)
    limit = window - shift
    for gen, head in zip(pending, heads, strict=True):
        while head[1] < limit:
            factors.append(head)
            head = next(gen)
    return binomial_product(factors, window)


def poch_inf(a: Monomial, m: RationalLike, valid_through: RationalLike) -> QSeries:
    return poch_product([(a, m)], valid_through)


def poch_finite(
    a: Monomial, m: RationalLike, n: int, valid_through: RationalLike
) -> QSeries:
    if n < 0:
        raise ValueError(f"finite Pochhammer length must be nonnegative, got {n}")
    step = as_fraction(m)
    return binomial_product(
        ((a.sign, a.exponent + step * k) for k in range(n)), valid_through
    )


@lru_cache(maxsize=64)
def reciprocal_table(width: int) -> tuple[tuple[int, ...], ...]:
    """Dense ``1/(q;q)_n`` at scale 1 for ``0 <= n < width``."""
    if width <= 0:
        return ((),)
    buf = [0] * width
    buf[0] = 1
    rows = [tuple(buf)]
    for n in range(1, width):
        _dense.divide_binomial(buf, n)
        rows.append(tuple(buf))
    return tuple(rows)


def reciprocal_dense(n: int, width: int) -> tuple[int, ...]:
    """Dense ``1/(q;q)_n``; factors of degree ``width`` or more leave it unchanged."""
    table = reciprocal_table(width)
    return table[min(n, len(table) - 1)]


def inv_poch_reciprocal(n: int, valid_through: RationalLike) -> QSeries:
    """``1/(q;q)_n`` with the convention that it vanishes for negative ``n``."""
    window = as_fraction(valid_through)
    if n < 0:
        return QSeries.zero(window)
    width = max(math.ceil(window), 0)
    return QSeries.from_dense(reciprocal_dense(n, width), 0, width).truncate(window)


@dataclass(frozen=True, slots=True)
class ThetaSpec:
    """``j(z; q^m)``."""

    z: Monomial
    m: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "m", as_fraction(self.m))
        if self.m <= 0:
            raise ValueError(f"theta base exponent must be positive, got {self.m}")

    @classmethod
    def of(cls, z: Monomial, m: RationalLike) -> ThetaSpec:
        return cls(z=z, m=as_fraction(m))

    @classmethod
    def euler(cls, m: RationalLike) -> ThetaSpec:
        """``(q^m; q^m)_inf`` written as ``j(q^m; q^3m)``."""
        base = as_fraction(m)
        return cls(z=Monomial.q(base), m=3 * base)

    def exponent(self, n: int) -> Fraction:
        return self.m * n * (n - 1) / 2 + self.z.exponent * n

    def coefficient_sign(self, n: int) -> int:
        return (-self.z.sign) ** (n % 2)

    def lead(self) -> Fraction | None:
        """Lowest exponent of the expansion, or ``None`` when it vanishes identically."""
        vertex = Fraction(1, 2) - self.z.exponent / self.m
        low = math.floor(vertex)
        high = math.ceil(vertex)
        if low == high:
            return self.exponent(low)
        e_low, e_high = self.exponent(low), self.exponent(high)
        if e_low != e_high:
            return min(e_low, e_high)
        total = self.coefficient_sign(low) + self.coefficient_sign(high)
        return e_low if total else None

    def is_zero(self) -> bool:
        return self.lead() is None

    def series(self, valid_through: RationalLike) -> QSeries:
        return jtheta(self, valid_through)

    def __str__(self) -> str:
        return f"j({self.z}; q^{self.m})"


def jtheta(t: ThetaSpec, valid_through: RationalLike) -> QSeries:
    """Bilateral sum ``sum_n (-1)^n q^(m*C(n,2)) z^n`` below ``valid_through``."""
    window = as_fraction(valid_through)
    scale = scale_for(window, t.m, t.z.exponent)
    coeffs: dict[int, int] = {}
    vertex = Fraction(1, 2) - t.z.exponent / t.m
    start = math.ceil(vertex)
    for direction, first in ((1, start), (-1, start - 1)):
        n = first
        while True:
            exponent = t.exponent(n)
            if exponent >= window:
                break
            key = int(exponent * scale)
            coeffs[key] = coeffs.get(key, 0) + t.coefficient_sign(n)
            n += direction
    return QSeries(coeffs, index_window(window, scale), scale)


def jtheta_product(t: ThetaSpec, valid_through: RationalLike) -> QSeries:
    """``(z, q^m/z, q^m; q^m)_inf`` expanded factor by factor."""
    inverse = Monomial(t.z.sign, t.m - t.z.exponent)
    return poch_product(
        [(t.z, t.m), (inverse, t.m), (Monomial.q(t.m), t.m)], valid_through
    )


def J(a: RationalLike, m: RationalLike, valid_through: RationalLike) -> QSeries:
    return jtheta(ThetaSpec.of(Monomial.q(a), m), valid_through)


def Jbar(a: RationalLike, m: RationalLike, valid_through: RationalLike) -> QSeries:
    return jtheta(ThetaSpec.of(Monomial.q(a, sign=-1), m), valid_through)


def Jm(m: RationalLike, valid_through: RationalLike) -> QSeries:
    return jtheta(ThetaSpec.euler(m), valid_through)


def theta_quotient(
    prefactor: Monomial,
    numerators: Sequence[ThetaSpec],
    denominators: Sequence[ThetaSpec],
    valid_through: RationalLike,
    *,
    coefficient: int = 1,
) -> QSeries:
    """``coefficient * prefactor * prod(numerators) / prod(denominators)``.

    Every factor is expanded just far enough that the quotient is exact below
    ``valid_through``.
    """
    window = as_fraction(valid_through)
    num_leads: list[Fraction] = []
    for theta in numerators:
        lead = theta.lead()
        if lead is None:
            return QSeries.zero(window, scale_for(prefactor.exponent))
        num_leads.append(lead)
    den_leads: list[Fraction] = []
    for theta in denominators:
        lead = theta.lead()
        if lead is None:
            raise PoleError(f"theta quotient denominator {theta} vanishes identically")
        den_leads.append(lead)
    total_shift = prefactor.exponent + sum(num_leads) - sum(den_leads)
    relative = window - total_shift
    if relative <= 0:
        return QSeries.zero(window, scale_for(total_shift))
    result = QSeries.constant(coefficient * prefactor.sign, relative)
    for theta, lead in zip(numerators, num_leads, strict=True):
        result = result * jtheta(theta, lead + relative).shift(-lead)
    for theta, lead in zip(denominators, den_leads, strict=True):
        result = result * jtheta(theta, lead + relative).shift(-lead).invert()
    return result.shift(total_shift).truncate(window)
