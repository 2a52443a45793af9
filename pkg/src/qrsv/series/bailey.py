from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from qrsv.series import _dense
from qrsv.series._scan import safety_radius, scan_rows
from qrsv.series.core import CheckOutcome, QSeries, RationalLike, as_fraction, equal_to_order
from qrsv.series.qfunctions import reciprocal_dense


class PairId(str, Enum):
    BP1 = "BP1"
    BP2 = "BP2"
    BP3 = "BP3"


@dataclass(frozen=True, slots=True)
class AlphaParts:
    """``sum(coef * q^exp) / prod(1 - q^step)`` with nonnegative exponents."""

    numerator: tuple[tuple[int, int], ...]
    denominator: tuple[int, ...] = ()

    @property
    def is_zero(self) -> bool:
        return not self.numerator

    @property
    def lead(self) -> int | None:
        if not self.numerator:
            return None
        return min(exponent for _, exponent in self.numerator)

    def dense(self, width: int) -> list[int]:
        buf = [0] * width
        for coef, exponent in self.numerator:
            if exponent < width:
                buf[exponent] += coef
        for step in self.denominator:
            _dense.divide_binomial(buf, step)
        return buf


_ZERO = AlphaParts(())


def _split(n: int) -> tuple[int, int]:
    """Write ``n`` as ``3k + offset`` with offset in ``{-1, 0, 1}``."""
    residue = n % 3
    if residue == 2:
        return (n + 1) // 3, -1
    return n // 3, residue


def _bp1(n: int) -> AlphaParts:
    if n == 0:
        return AlphaParts(((1, 0),))
    k, offset = _split(n)
    if offset == -1:
        return AlphaParts(((-1, 6 * k * k - 5 * k + 1),))
    if offset == 0:
        return AlphaParts(((1, 6 * k * k - k), (1, 6 * k * k + k)))
    return AlphaParts(((-1, 6 * k * k + 5 * k + 1),))


def _bp2(n: int) -> AlphaParts:
    if n == 0:
        return AlphaParts(((1, 0),))
    k, offset = _split(n)
    if offset == -1:
        return AlphaParts(((-1, 6 * k * k - 5 * k + 1), (1, 6 * k * k + k)), (1,))
    if offset == 0:
        return AlphaParts(((1, 6 * k * k - k), (-1, 6 * k * k + 5 * k + 1)), (1,))
    return _ZERO


def _bp3(n: int) -> AlphaParts:
    if n == 0:
        return AlphaParts(((1, 0),), (1,))
    k, offset = _split(n)
    if offset == -1:
        return _ZERO
    if offset == 0:
        return AlphaParts(((1, 6 * k * k + k), (-1, 6 * k * k + 7 * k + 2)), (1, 2))
    return AlphaParts(((-1, 6 * k * k + 5 * k + 1), (1, 6 * k * k + 11 * k + 5)), (1, 2))


_ALPHA = {PairId.BP1: _bp1, PairId.BP2: _bp2, PairId.BP3: _bp3}
# (exponent of the relative parameter a, offset of the Pochhammer length in beta)
_SHAPE = {PairId.BP1: (0, 0), PairId.BP2: (1, 0), PairId.BP3: (2, 1)}


@dataclass(frozen=True, slots=True)
class BaileyPair:
    """A Bailey pair relative to ``(q^relative; q)``."""

    pair_id: PairId

    @property
    def relative(self) -> int:
        return _SHAPE[self.pair_id][0]

    def alpha_parts(self, n: int) -> AlphaParts:
        if n < 0:
            raise ValueError(f"Bailey pair index must be nonnegative, got {n}")
        return _ALPHA[self.pair_id](n)

    def beta_length(self, n: int) -> int:
        """``beta_n = 1/(q;q)_L`` for this ``L``."""
        return 2 * n + _SHAPE[self.pair_id][1]

    def alpha_dense(self, n: int, width: int) -> list[int]:
        return self.alpha_parts(n).dense(width)

    def beta_dense(self, n: int, width: int) -> tuple[int, ...]:
        return reciprocal_dense(self.beta_length(n), width)

    def __str__(self) -> str:
        return self.pair_id.value


BP1 = BaileyPair(PairId.BP1)
BP2 = BaileyPair(PairId.BP2)
BP3 = BaileyPair(PairId.BP3)


def _width(valid_through: RationalLike) -> tuple[Fraction, int]:
    window = as_fraction(valid_through)
    return window, max(math.ceil(window), 0)


def bp_alpha(pair: BaileyPair, n: int, valid_through: RationalLike) -> QSeries:
    window, width = _width(valid_through)
    return QSeries.from_dense(pair.alpha_dense(n, width), 0, width).truncate(window)


def bp_beta(pair: BaileyPair, n: int, valid_through: RationalLike) -> QSeries:
    window, width = _width(valid_through)
    if n < 0:
        raise ValueError(f"Bailey pair index must be nonnegative, got {n}")
    return QSeries.from_dense(pair.beta_dense(n, width), 0, width).truncate(window)


def bailey_sum(pair: BaileyPair, n: int, valid_through: RationalLike) -> QSeries:
    """``sum_i alpha_i / ((q;q)_(n-i) (aq;q)_(n+i))`` for ``a = q^relative``."""
    window, width = _width(valid_through)
    k = pair.relative
    acc = [0] * width
    for i in range(n + 1):
        parts = pair.alpha_parts(i)
        if parts.is_zero or (parts.lead or 0) >= width:
            continue
        # 1/(q^(k+1); q)_(n+i) = (q;q)_k / (q;q)_(n+i+k)
        term = _dense.convolve(parts.dense(width), reciprocal_dense(n - i, width), width)
        term = _dense.convolve(term, reciprocal_dense(n + i + k, width), width)
        for step in range(1, k + 1):
            _dense.multiply_binomial(term, step)
        for index, coeff in enumerate(term):
            acc[index] += coeff
    return QSeries.from_dense(acc, 0, width).truncate(window)


def verify_bailey(pair: BaileyPair, n_max: int, valid_through: RationalLike) -> CheckOutcome:
    """Check the defining relation of ``pair`` for every ``n <= n_max``."""
    window = as_fraction(valid_through)
    outcome = CheckOutcome(passed=True, order=window, window=window)
    for n in range(n_max + 1):
        current = equal_to_order(bp_beta(pair, n, window), bailey_sum(pair, n, window), window)
        if not current.passed:
            return CheckOutcome(
                passed=False,
                order=current.order,
                window=current.window,
                mismatch=current.mismatch,
                label=f"n={n}",
            )
        outcome = current
    return outcome


class SlaterId(str, Enum):
    FIRST = "slater1"
    SECOND = "slater2"


def slater_sides(which: SlaterId, n: int, valid_through: RationalLike) -> tuple[QSeries, QSeries]:
    """Both sides of the finite Slater identity for index ``n``."""
    window, width = _width(valid_through)
    acc = [0] * width
    bound = n // 3
    for r in range(-bound, bound + 1):
        if which is SlaterId.FIRST:
            numerator = [(1, 6 * r * r - r), (-1, 6 * r * r + 5 * r + 1)]
            lengths = (n - 3 * r, n + 3 * r + 1)
        else:
            numerator = [(1, 6 * r * r + r), (-1, 6 * r * r + 7 * r + 2)]
            # 1/(q^2;q)_m = (1-q)/(q;q)_(m+1)
            lengths = (n - 3 * r, n + 3 * r + 2)
        buf = [0] * width
        _dense.add_terms(buf, ((e, c) for c, e in numerator))
        buf = _dense.convolve(buf, reciprocal_dense(lengths[0], width), width)
        buf = _dense.convolve(buf, reciprocal_dense(lengths[1], width), width)
        if which is SlaterId.SECOND:
            _dense.multiply_binomial(buf, 1)
        for index, coeff in enumerate(buf):
            acc[index] += coeff
    rhs = QSeries.from_dense(acc, 0, width).truncate(window)
    if which is SlaterId.FIRST:
        lhs_dense = list(reciprocal_dense(2 * n, width))
    else:
        lhs_dense = list(reciprocal_dense(2 * n + 1, width))
        _dense.multiply_binomial(lhs_dense, 1)
    lhs = QSeries.from_dense(lhs_dense, 0, width).truncate(window)
    return lhs, rhs


class LovejoyShape(str, Enum):
    S = "S"
    T = "T"

    @property
    def pairs(self) -> tuple[BaileyPair, BaileyPair]:
        if self is LovejoyShape.S:
            return BP1, BP2
        return BP3, BP2


def lovejoy_lhs(
    pair_a: BaileyPair, pair_z: BaileyPair, valid_through: RationalLike
) -> QSeries:
    """``sum_(n,s) a^s z^n q^(2ns+s) beta_n(a) beta'_s(z)``."""
    window, width = _width(valid_through)
    ka, kz = pair_a.relative, pair_z.relative
    acc = [0] * width

    def exponent(n: int, s: int) -> int:
        return ka * s + kz * n + 2 * n * s + s

    def visit(n: int) -> None:
        beta_n = pair_a.beta_dense(n, width)
        s = 0
        while (shift := exponent(n, s)) < width:
            term = _dense.convolve(beta_n, pair_z.beta_dense(s, width), width - shift)
            _dense.add_shifted(acc, term, shift)
            s += 1

    radius = safety_radius(window, Fraction(1))
    scan_rows(
        0,
        1,
        lambda n: Fraction(exponent(n, 0)),
        visit,
        Fraction(width),
        radius,
        what=f"Lovejoy sum ({pair_a}, {pair_z})",
    )
    return QSeries.from_dense(acc, 0, width).truncate(window)


def lovejoy_rhs(
    pair_a: BaileyPair, pair_z: BaileyPair, valid_through: RationalLike
) -> QSeries:
    """Lovejoy's right-hand side.

    ``1/(aq, z; q)_inf * sum_(n,r) a^n z^r q^(2nr+n) (1-z)/(1-z q^2n) alpha_r(a) alpha'_n(z)``
    """
    window, width = _width(valid_through)
    ka, kz = pair_a.relative, pair_z.relative
    if kz == 0:
        raise ValueError("the second Bailey pair must be relative to a positive power of q")
    acc = [0] * width

    def row_minimum(n: int) -> Fraction:
        lead = pair_z.alpha_parts(n).lead
        return Fraction((ka + 1) * n + (0 if lead is None else lead))

    def visit(n: int) -> None:
        outer = pair_z.alpha_parts(n)
        if outer.is_zero:
            return
        base = (ka + 1) * n + (outer.lead or 0)
        outer_dense = outer.dense(width)
        if n:
            _dense.multiply_binomial(outer_dense, kz)
            _dense.divide_binomial(outer_dense, kz + 2 * n)
        r = 0
        while base + (kz + 2 * n) * r < width:
            inner = pair_a.alpha_parts(r)
            if not inner.is_zero:
                shift = (ka + 1) * n + (kz + 2 * n) * r
                span = width - shift
                term = _dense.convolve(outer_dense[:span], inner.dense(span), span)
                _dense.add_shifted(acc, term, shift)
            r += 1

    radius = safety_radius(window, Fraction(1))
    scan_rows(
        0,
        1,
        row_minimum,
        visit,
        Fraction(width),
        radius,
        what=f"Lovejoy transform ({pair_a}, {pair_z})",
    )
    for step in range(ka + 1, width):
        _dense.divide_binomial(acc, step)
    for step in range(max(kz, 1), width):
        _dense.divide_binomial(acc, step)
    return QSeries.from_dense(acc, 0, width).truncate(window)
