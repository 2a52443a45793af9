"""Exact truncated q-series and the special functions built on them."""

from qrsv.series.appell import AppellSpec, appell_m, f232_via_appell, m_difference
from qrsv.series.bailey import BP1, BP2, BP3, BaileyPair, LovejoyShape, PairId
from qrsv.series.core import CheckOutcome, Mismatch, Monomial, QSeries, equal_to_order
from qrsv.series.errors import (
    DivergentProduct,
    EmptyWindow,
    InsufficientOrder,
    NonUnitLead,
    PoleError,
    QSeriesError,
    ScaleError,
    TruncationUnbounded,
)
from qrsv.series.hecke import HeckeSpec, hecke_f
from qrsv.series.nahm import NahmSpec, nahm_sum
from qrsv.series.qfunctions import ThetaSpec, jtheta, poch_finite, poch_inf, theta_quotient

__all__ = [
    "AppellSpec",
    "BP1",
    "BP2",
    "BP3",
    "BaileyPair",
    "CheckOutcome",
    "DivergentProduct",
    "EmptyWindow",
    "HeckeSpec",
    "InsufficientOrder",
    "LovejoyShape",
    "Mismatch",
    "Monomial",
    "NahmSpec",
    "NonUnitLead",
    "PairId",
    "PoleError",
    "QSeries",
    "QSeriesError",
    "ScaleError",
    "ThetaSpec",
    "TruncationUnbounded",
    "appell_m",
    "equal_to_order",
    "f232_via_appell",
    "hecke_f",
    "jtheta",
    "m_difference",
    "nahm_sum",
    "poch_finite",
    "poch_inf",
    "theta_quotient",
]
