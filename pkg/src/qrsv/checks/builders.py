from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from qrsv.eval import Evaluator
from qrsv.parse import ast, parse_expr
from qrsv.series.appell import f232_via_appell, m_difference
from qrsv.series.bailey import (
    BaileyPair,
    LovejoyShape,
    SlaterId,
    bailey_sum,
    bp_beta,
    lovejoy_lhs,
    lovejoy_rhs,
    slater_sides,
)
from qrsv.series.core import Monomial, QSeries
from qrsv.series.hecke import HeckeSpec, hecke_f
from qrsv.series.qfunctions import Jm


@lru_cache(maxsize=None)
def _parsed(text: str) -> ast.Expr:
    return parse_expr(text, "<catalogue>")


@dataclass(frozen=True, slots=True)
class Expression:
    """A side written in the expression language, parsed on first use."""

    text: str

    def __call__(self, working: Fraction) -> QSeries:
        return Evaluator().series(_parsed(self.text), working)


@dataclass(frozen=True, slots=True)
class BaileyBeta:
    pair: BaileyPair
    n: int

    def __call__(self, working: Fraction) -> QSeries:
        return bp_beta(self.pair, self.n, working)


@dataclass(frozen=True, slots=True)
class BaileySum:
    pair: BaileyPair
    n: int

    def __call__(self, working: Fraction) -> QSeries:
        return bailey_sum(self.pair, self.n, working)


@dataclass(frozen=True, slots=True)
class SlaterSide:
    which: SlaterId
    n: int
    right: bool

    def __call__(self, working: Fraction) -> QSeries:
        lhs, rhs = slater_sides(self.which, self.n, working)
        return rhs if self.right else lhs


@dataclass(frozen=True, slots=True)
class LovejoySide:
    """One side of the Lovejoy transform for ``shape``, optionally times ``(q;q)_inf^2``."""

    shape: LovejoyShape
    transformed: bool
    with_euler: bool = False

    def __call__(self, working: Fraction) -> QSeries:
        pair_a, pair_z = self.shape.pairs
        side = lovejoy_rhs if self.transformed else lovejoy_lhs
        series = side(pair_a, pair_z, working)
        if self.with_euler:
            series = Jm(1, working) ** 2 * series
        return series


@dataclass(frozen=True, slots=True)
class LovejoyAtRoot:
    """``(q;q)_inf^2`` times the transformed Lovejoy sum, read at ``q^(1/2)``."""

    shape: LovejoyShape

    def __call__(self, working: Fraction) -> QSeries:
        inner = LovejoySide(self.shape, transformed=True, with_euler=True)
        return inner(2 * working).rescale(Fraction(1, 2))


def _minus_q(exponent: int) -> Monomial:
    return Monomial.q(exponent, sign=-1)


@dataclass(frozen=True, slots=True)
class HeckeSide:
    """``f_{2,3,2}(-q^x, -q^y, q^base)`` summed directly."""

    x: int
    y: int
    base: int = 3

    def __call__(self, working: Fraction) -> QSeries:
        spec = HeckeSpec(2, 3, 2, _minus_q(self.x), _minus_q(self.y), Fraction(self.base))
        return hecke_f(spec, working)


@dataclass(frozen=True, slots=True)
class AppellExpansion:
    """``f_{2,3,2}(-q^x, -q^y, q^base)`` through its Appell-Lerch expansion at ``ell``."""

    x: int
    y: int
    ell: int
    base: int = 3

    def __call__(self, working: Fraction) -> QSeries:
        return f232_via_appell(_minus_q(self.x), _minus_q(self.y), self.base, self.ell, working)


@dataclass(frozen=True, slots=True)
class AppellDifference:
    """Theta quotient for ``m(x, q^p, q^z1) - m(x, q^p, q^z0)``."""

    x: Monomial
    p: int
    z0: int
    z1: int

    def __call__(self, working: Fraction) -> QSeries:
        return m_difference(self.x, self.p, Monomial.q(self.z0), Monomial.q(self.z1), working)
