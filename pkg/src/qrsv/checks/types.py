from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from typing import Any

from qrsv.series.core import Mismatch, Monomial, QSeries, RationalLike, as_fraction
from qrsv.series.dump import format_exponent

Builder = Callable[[Fraction], QSeries]
"""Produces a series from a working order; the result may be valid through less."""


@dataclass(frozen=True, slots=True)
class SidePair:
    label: str
    lhs: Builder
    rhs: Builder


@dataclass(frozen=True, slots=True)
class _Perturbed:
    build: Builder
    exponent: Fraction
    delta: int

    def __call__(self, working: Fraction) -> QSeries:
        series = self.build(working)
        bump = Monomial.q(self.exponent).series(self.exponent.denominator, series.valid_through)
        return series + bump.scaled(self.delta)


@dataclass(frozen=True, slots=True)
class IdentityCheck:
    """One catalogued identity; passes when every side pair agrees."""

    id: str
    description: str
    anchor: str
    default_order: Fraction
    pairs: tuple[SidePair, ...]
    scale: int = 1

    def perturbed(self, exponent: RationalLike, delta: int = 1) -> IdentityCheck:
        """The same check with ``delta * q^exponent`` added to every right-hand side."""
        e = as_fraction(exponent)
        return replace(
            self,
            pairs=tuple(
                SidePair(pair.label, pair.lhs, _Perturbed(pair.rhs, e, delta))
                for pair in self.pairs
            ),
        )


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    ERROR = "error"


@dataclass(frozen=True, slots=True)
class CheckReport:
    id: str
    order: Fraction
    status: CheckStatus
    window: Fraction | None = None
    mismatch: Mismatch | None = None
    label: str | None = None
    message: str | None = None
    millis: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status is CheckStatus.PASS

    def to_dict(self) -> dict[str, Any]:
        payload: dict[str, Any] = {
            "id": self.id,
            "order": format_exponent(self.order),
            "window": None if self.window is None else format_exponent(self.window),
            "status": self.status.value,
            "millis": round(self.millis, 3),
        }
        if self.mismatch is not None:
            payload["mismatch"] = {
                "exponent": format_exponent(self.mismatch.exponent),
                "lhs": self.mismatch.lhs,
                "rhs": self.mismatch.rhs,
                "pair": self.label,
            }
        if self.message is not None:
            payload["message"] = self.message
        return payload
