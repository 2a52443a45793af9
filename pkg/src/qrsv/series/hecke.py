from __future__ import annotations

import logging
from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction

from qrsv.series._scan import convex_span, safety_radius, scan_rows
from qrsv.series.core import Monomial, QSeries, RationalLike, as_fraction, index_window, scale_for

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class HeckeSpec:
    """``f_{a,b,c}(x, y, q^m)`` summed over index pairs of matching sign."""

    a: int
    b: int
    c: int
    x: Monomial
    y: Monomial
    m: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        object.__setattr__(self, "m", as_fraction(self.m))
        if self.a <= 0 or self.c <= 0:
            raise ValueError(
                f"Hecke-type series needs a > 0 and c > 0, got a={self.a}, c={self.c}"
            )
        if self.m <= 0:
            raise ValueError(f"Hecke-type base exponent must be positive, got {self.m}")

    def exponent(self, r: int, s: int) -> Fraction:
        quadratic = self.a * r * (r - 1) // 2 + self.b * r * s + self.c * s * (s - 1) // 2
        return self.m * quadratic + self.x.exponent * r + self.y.exponent * s

    def sign(self, r: int, s: int) -> int:
        sg = 1 if r >= 0 else -1
        parity = -1 if (r + s) % 2 else 1
        return sg * parity * self.x.sign ** (r % 2) * self.y.sign ** (s % 2)

    def swapped(self) -> HeckeSpec:
        return HeckeSpec(self.c, self.b, self.a, self.y, self.x, self.m)

    def _vertex(self, r: int) -> Fraction:
        return Fraction(1, 2) - (self.b * r + self.y.exponent / self.m) / self.c

    def row(self, r: int, window: Fraction) -> Iterator[int]:
        """Every ``s`` in row ``r`` whose term lies below ``window``."""
        low, high = (0, None) if r >= 0 else (None, -1)
        start = convex_span(self._vertex(r), low, high)
        s = start
        while (high is None or s <= high) and self.exponent(r, s) < window:
            yield s
            s += 1
        s = start - 1
        while (low is None or s >= low) and self.exponent(r, s) < window:
            yield s
            s -= 1

    def row_minimum(self, r: int) -> Fraction:
        low, high = (0, None) if r >= 0 else (None, -1)
        start = convex_span(self._vertex(r), low, high)
        best = self.exponent(r, start)
        if low is None or start - 1 >= low:
            best = min(best, self.exponent(r, start - 1))
        return best

    def __str__(self) -> str:
        return f"f_{{{self.a},{self.b},{self.c}}}({self.x}, {self.y}, q^{self.m})"


def hecke_f(spec: HeckeSpec, valid_through: RationalLike) -> QSeries:
    """Truncated ``f_{a,b,c}(x, y, q^m)`` exact below ``valid_through``."""
    window = as_fraction(valid_through)
    scale = scale_for(window, spec.m, spec.x.exponent, spec.y.exponent)
    radius = safety_radius(window, spec.m, spec.x.exponent + spec.y.exponent)
    coeffs: dict[int, int] = {}

    def visit(r: int) -> None:
        for s in spec.row(r, window):
            key = int(spec.exponent(r, s) * scale)
            coeffs[key] = coeffs.get(key, 0) + spec.sign(r, s)

    top = scan_rows(0, 1, spec.row_minimum, visit, window, radius, what=str(spec))
    bottom = scan_rows(-1, -1, spec.row_minimum, visit, window, radius, what=str(spec))
    LOGGER.debug("%s below q^%s used rows %d..%d", spec, window, bottom, top)
    return QSeries(coeffs, index_window(window, scale), scale)


def hecke_f_bruteforce(spec: HeckeSpec, valid_through: RationalLike, radius: int) -> QSeries:
    """Naive double loop over ``|r|, |s| <= radius``."""
    window = as_fraction(valid_through)
    scale = scale_for(window, spec.m, spec.x.exponent, spec.y.exponent)
    coeffs: dict[int, int] = {}
    for r in range(-radius, radius + 1):
        for s in range(-radius, radius + 1):
            if (r >= 0) != (s >= 0):
                continue
            exponent = spec.exponent(r, s)
            if exponent < window:
                key = int(exponent * scale)
                coeffs[key] = coeffs.get(key, 0) + spec.sign(r, s)
    return QSeries(coeffs, index_window(window, scale), scale)
