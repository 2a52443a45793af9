from __future__ import annotations

import logging
import math
from collections.abc import Callable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction

from qrsv.series import _dense
from qrsv.series.errors import EmptyWindow, InsufficientOrder, NonUnitLead, ScaleError

LOGGER = logging.getLogger(__name__)

RationalLike = int | Fraction | str

DEFAULT_PADDING = 10
DEFAULT_RETRIES = 4
_DENSE_CUTOFF = 24


def as_fraction(value: RationalLike) -> Fraction:
    if isinstance(value, bool):
        raise TypeError("booleans are not exponents")
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def index_window(valid_through: Fraction, scale: int) -> int:
    """Smallest index ``i`` at ``scale`` with ``i / scale >= valid_through``."""
    return math.ceil(valid_through * scale)


def scale_for(*values: Fraction) -> int:
    scale = 1
    for value in values:
        scale = math.lcm(scale, value.denominator)
    return scale


@dataclass(frozen=True, slots=True)
class Monomial:
    """A signed rational power of q."""

    sign: int
    exponent: Fraction

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError(f"monomial sign must be +1 or -1, got {self.sign}")
        object.__setattr__(self, "exponent", as_fraction(self.exponent))

    @classmethod
    def q(cls, exponent: RationalLike = 1, sign: int = 1) -> Monomial:
        return cls(sign=sign, exponent=as_fraction(exponent))

    def __neg__(self) -> Monomial:
        return Monomial(-self.sign, self.exponent)

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(self.sign * other.sign, self.exponent + other.exponent)

    def __truediv__(self, other: Monomial) -> Monomial:
        return self * other.inverse()

    def __pow__(self, power: int) -> Monomial:
        return Monomial(self.sign ** abs(power), self.exponent * power)

    def inverse(self) -> Monomial:
        return Monomial(self.sign, -self.exponent)

    def shifted(self, exponent: RationalLike) -> Monomial:
        return Monomial(self.sign, self.exponent + as_fraction(exponent))

    def series(self, scale: int, valid_through: RationalLike) -> QSeries:
        return monomial_series(self, scale, valid_through)

    def __str__(self) -> str:
        sign = "-" if self.sign < 0 else ""
        if self.exponent == 0:
            return f"{sign}1"
        if self.exponent == 1:
            return f"{sign}q"
        if self.exponent.denominator == 1:
            return f"{sign}q^{self.exponent.numerator}"
        return f"{sign}q^({self.exponent})"


def monomial_series(m: Monomial, scale: int, valid_through: RationalLike) -> QSeries:
    if scale <= 0:
        raise ScaleError(f"scale must be positive, got {scale}")
    scaled = m.exponent * scale
    if scaled.denominator != 1:
        raise ScaleError(f"exponent {m.exponent} is not a multiple of 1/{scale}")
    window = as_fraction(valid_through)
    scale = math.lcm(scale, window.denominator)
    index = int(m.exponent * scale)
    return QSeries({index: m.sign}, index_window(window, scale), scale)


@dataclass(frozen=True, slots=True)
class Mismatch:
    exponent: Fraction
    lhs: int
    rhs: int


@dataclass(frozen=True, slots=True)
class CheckOutcome:
    passed: bool
    order: Fraction
    window: Fraction
    mismatch: Mismatch | None = None
    label: str | None = None


class QSeries:
    """Exact truncated Laurent series in ``q^(1/scale)``.

    Coefficients are stored by integer index (exponent times ``scale``). Every
    index below ``valid_index`` is exact; indices at or above it are unknown.
    Instances are immutable.
    """

    __slots__ = ("_scale", "_coeffs", "_valid")

    _scale: int
    _coeffs: dict[int, int]
    _valid: int

    def __init__(self, coeffs: Mapping[int, int], valid_index: int, scale: int = 1) -> None:
        if scale <= 0:
            raise ScaleError(f"scale must be positive, got {scale}")
        object.__setattr__(self, "_scale", scale)
        object.__setattr__(self, "_valid", valid_index)
        object.__setattr__(
            self,
            "_coeffs",
            {int(k): int(v) for k, v in coeffs.items() if v and k < valid_index},
        )

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("QSeries is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, valid_through: RationalLike, scale: int = 1) -> QSeries:
        window = as_fraction(valid_through)
        scale = math.lcm(scale, window.denominator)
        return cls({}, index_window(window, scale), scale)

    @classmethod
    def constant(cls, value: int, valid_through: RationalLike, scale: int = 1) -> QSeries:
        window = as_fraction(valid_through)
        scale = math.lcm(scale, window.denominator)
        return cls({0: value}, index_window(window, scale), scale)

    @classmethod
    def one(cls, valid_through: RationalLike, scale: int = 1) -> QSeries:
        return cls.constant(1, valid_through, scale)

    @classmethod
    def from_terms(
        cls, terms: Mapping[Fraction, int] | Mapping[int, int], valid_through: RationalLike
    ) -> QSeries:
        window = as_fraction(valid_through)
        exponents = [as_fraction(e) for e in terms]
        scale = scale_for(window, *exponents)
        coeffs: dict[int, int] = {}
        for exponent, coeff in zip(exponents, terms.values(), strict=True):
            key = int(exponent * scale)
            coeffs[key] = coeffs.get(key, 0) + coeff
        return cls(coeffs, index_window(window, scale), scale)

    @classmethod
    def from_dense(
        cls, buf: Sequence[int], offset: int, valid_index: int, scale: int = 1
    ) -> QSeries:
        return cls(
            {offset + i: c for i, c in enumerate(buf) if c},
            valid_index,
            scale,
        )

    # -- inspection ---------------------------------------------------------

    @property
    def scale(self) -> int:
        return self._scale

    @property
    def valid_index(self) -> int:
        return self._valid

    @property
    def valid_through(self) -> Fraction:
        return Fraction(self._valid, self._scale)

    @property
    def lead(self) -> Fraction | None:
        if not self._coeffs:
            return None
        return Fraction(min(self._coeffs), self._scale)

    def lower_bound(self) -> Fraction:
        """Lowest exponent that can carry a nonzero coefficient."""
        lead = self.lead
        return self.valid_through if lead is None else lead

    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, exponent: RationalLike) -> int:
        e = as_fraction(exponent)
        if e >= self.valid_through:
            raise InsufficientOrder(
                f"coefficient of q^{e} requested beyond the valid window {self.valid_through}",
                required=e,
                available=self.valid_through,
            )
        index = e * self._scale
        if index.denominator != 1:
            return 0
        return self._coeffs.get(int(index), 0)

    def items(self) -> list[tuple[int, int]]:
        return sorted(self._coeffs.items())

    def terms(self) -> Iterator[tuple[Fraction, int]]:
        for index, coeff in self.items():
            yield Fraction(index, self._scale), coeff

    def to_dense(self, offset: int, width: int) -> list[int]:
        buf = [0] * width
        _dense.add_terms(buf, self._coeffs.items(), -offset)
        return buf

    def __len__(self) -> int:
        return len(self._coeffs)

    # -- rescaling helpers --------------------------------------------------

    def with_scale(self, scale: int) -> QSeries:
        if scale % self._scale:
            raise ScaleError(f"scale {scale} is not a multiple of {self._scale}")
        factor = scale // self._scale
        if factor == 1:
            return self
        return QSeries(
            {k * factor: v for k, v in self._coeffs.items()}, self._valid * factor, scale
        )

    def normalized(self) -> QSeries:
        g = self._scale
        g = math.gcd(g, self._valid)
        for key in self._coeffs:
            if g == 1:
                return self
            g = math.gcd(g, key)
        if g == 1:
            return self
        return QSeries(
            {k // g: v for k, v in self._coeffs.items()}, self._valid // g, self._scale // g
        )

    @staticmethod
    def _aligned(a: QSeries, b: QSeries) -> tuple[QSeries, QSeries]:
        if a._scale == b._scale:
            return a, b
        scale = math.lcm(a._scale, b._scale)
        return a.with_scale(scale), b.with_scale(scale)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other: object) -> QSeries | None:
        if isinstance(other, QSeries):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return QSeries({0: other}, self._valid, self._scale)
        if isinstance(other, Monomial):
            scale = math.lcm(self._scale, other.exponent.denominator)
            return monomial_series(other, scale, self.valid_through)
        return None

    def __add__(self, other: object) -> QSeries:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        a, b = QSeries._aligned(self, rhs)
        coeffs = dict(a._coeffs)
        for k, v in b._coeffs.items():
            coeffs[k] = coeffs.get(k, 0) + v
        return QSeries(coeffs, min(a._valid, b._valid), a._scale)

    def __radd__(self, other: object) -> QSeries:
        return self.__add__(other)

    def __neg__(self) -> QSeries:
        return QSeries({k: -v for k, v in self._coeffs.items()}, self._valid, self._scale)

    def __sub__(self, other: object) -> QSeries:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> QSeries:
        return (-self).__add__(other)

    def scaled(self, factor: int) -> QSeries:
        return QSeries({k: v * factor for k, v in self._coeffs.items()}, self._valid, self._scale)

    def shift(self, exponent: RationalLike) -> QSeries:
        """Exact multiplication by ``q^exponent``; the window moves along."""
        e = as_fraction(exponent)
        scale = math.lcm(self._scale, e.denominator)
        base = self.with_scale(scale)
        offset = int(e * scale)
        return QSeries(
            {k + offset: v for k, v in base._coeffs.items()}, base._valid + offset, scale
        )

    def times_monomial(self, m: Monomial) -> QSeries:
        shifted = self.shift(m.exponent)
        return shifted if m.sign == 1 else -shifted

    def __mul__(self, other: object) -> QSeries:
        if isinstance(other, int) and not isinstance(other, bool):
            return self.scaled(other)
        if isinstance(other, Monomial):
            return self.times_monomial(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        a, b = QSeries._aligned(self, other)
        lead_a = min(a._coeffs) if a._coeffs else a._valid
        lead_b = min(b._coeffs) if b._coeffs else b._valid
        valid = min(a._valid + lead_b, b._valid + lead_a)
        if not a._coeffs or not b._coeffs:
            return QSeries({}, valid, a._scale)
        if len(a._coeffs) > _DENSE_CUTOFF and len(b._coeffs) > _DENSE_CUTOFF:
            width = valid - lead_a - lead_b
            if width <= 0:
                return QSeries({}, valid, a._scale)
            out = _dense.convolve(a.to_dense(lead_a, width), b.to_dense(lead_b, width), width)
            return QSeries.from_dense(out, lead_a + lead_b, valid, a._scale)
        coeffs: dict[int, int] = {}
        b_items = b.items()
        for ka, va in a.items():
            limit = valid - ka
            for kb, vb in b_items:
                if kb >= limit:
                    break
                key = ka + kb
                coeffs[key] = coeffs.get(key, 0) + va * vb
        return QSeries(coeffs, valid, a._scale)

    def __rmul__(self, other: object) -> QSeries:
        return self.__mul__(other)

    def invert(self) -> QSeries:
        if not self._coeffs:
            raise EmptyWindow(
                f"cannot invert a series with no known term below q^{self.valid_through}"
            )
        lead = min(self._coeffs)
        unit = self._coeffs[lead]
        if unit not in (1, -1):
            raise NonUnitLead(
                f"leading coefficient {unit} at q^{Fraction(lead, self._scale)} is not a unit"
            )
        width = self._valid - lead
        tail = [(k - lead, v * unit) for k, v in self.items() if k != lead]
        inv = [0] * width
        inv[0] = 1
        for n in range(1, width):
            acc = 0
            for k, pk in tail:
                if k > n:
                    break
                acc -= pk * inv[n - k]
            inv[n] = acc
        coeffs = {n - lead: unit * v for n, v in enumerate(inv) if v}
        return QSeries(coeffs, self._valid - 2 * lead, self._scale)

    def __truediv__(self, other: object) -> QSeries:
        if isinstance(other, int) and not isinstance(other, bool):
            if other not in (1, -1):
                raise NonUnitLead(f"division by the non-unit constant {other}")
            return self.scaled(other)
        if isinstance(other, Monomial):
            return self.times_monomial(other.inverse())
        if not isinstance(other, QSeries):
            return NotImplemented
        return self * other.invert()

    def __pow__(self, power: int) -> QSeries:
        if power < 0:
            return self.invert() ** (-power)
        if power == 0:
            lead = min(self._coeffs) if self._coeffs else self._valid
            return QSeries({0: 1}, self._valid - lead, self._scale)
        result: QSeries | None = None
        base = self
        while True:
            if power & 1:
                result = base if result is None else result * base
            power >>= 1
            if not power:
                break
            base = base * base
        assert result is not None
        return result

    def rescale(self, k: RationalLike) -> QSeries:
        """Formal substitution ``q -> q^k`` for positive rational ``k``."""
        factor = as_fraction(k)
        if factor <= 0:
            raise ValueError(f"rescale factor must be positive, got {factor}")
        num, den = factor.numerator, factor.denominator
        return QSeries(
            {key * num: v for key, v in self._coeffs.items()},
            self._valid * num,
            self._scale * den,
        ).normalized()

    def truncate(self, valid_through: RationalLike) -> QSeries:
        window = as_fraction(valid_through)
        if window >= self.valid_through:
            return self
        scale = math.lcm(self._scale, window.denominator)
        base = self.with_scale(scale)
        return QSeries(base._coeffs, index_window(window, scale), scale)

    # -- comparison and display ---------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        a, b = QSeries._aligned(self, other)
        return a._valid == b._valid and a._coeffs == b._coeffs

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"QSeries({self})"

    def __str__(self) -> str:
        parts: list[str] = []
        for exponent, coeff in self.terms():
            m = str(Monomial.q(exponent))
            if m == "1":
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = m
            else:
                body = f"{abs(coeff)}*{m}"
            sign = "-" if coeff < 0 else "+"
            parts.append(f"{sign} {body}")
        parts.append(f"+ O({Monomial.q(self.valid_through)})")
        text = " ".join(parts)
        if text.startswith("+ "):
            return text[2:]
        return "-" + text[2:]


def equal_to_order(a: QSeries, b: QSeries, order: RationalLike) -> CheckOutcome:
    """Compare every coefficient with exponent below ``order``."""
    target = as_fraction(order)
    window = min(a.valid_through, b.valid_through)
    if window < target:
        raise InsufficientOrder(
            f"comparison up to q^{target} needs both sides valid that far, have q^{window}",
            required=target,
            available=window,
        )
    lhs, rhs = QSeries._aligned(a, b)
    limit = index_window(target, lhs.scale)
    keys = sorted(set(lhs._coeffs) | set(rhs._coeffs))
    for key in keys:
        if key >= limit:
            break
        left = lhs._coeffs.get(key, 0)
        right = rhs._coeffs.get(key, 0)
        if left != right:
            return CheckOutcome(
                passed=False,
                order=target,
                window=window,
                mismatch=Mismatch(exponent=Fraction(key, lhs.scale), lhs=left, rhs=right),
            )
    return CheckOutcome(passed=True, order=target, window=window)


def through_order(
    build: Callable[[Fraction], QSeries],
    order: RationalLike,
    *,
    padding: int = DEFAULT_PADDING,
    retries: int = DEFAULT_RETRIES,
) -> QSeries:
    """Evaluate ``build`` at a padded working order until it reaches ``order``."""
    target = as_fraction(order)
    pad = Fraction(padding)
    series: QSeries | None = None
    for attempt in range(retries + 1):
        working = target + pad
        series = build(working)
        if series.valid_through >= target:
            return series.truncate(target)
        LOGGER.debug(
            "window q^%s short of q^%s at working order %s (attempt %d)",
            series.valid_through,
            target,
            working,
            attempt + 1,
        )
        pad *= 2
    available = series.valid_through if series is not None else Fraction(0)
    raise InsufficientOrder(
        f"could not reach q^{target} after {retries} retries (best window q^{available})",
        required=target,
        available=available,
    )
