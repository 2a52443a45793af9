from __future__ import annotations

from fractions import Fraction


class QSeriesError(Exception):
    """Base class for every failure raised by the series engine."""


class ScaleError(QSeriesError):
    """An exponent is not representable at the requested scale."""


class EmptyWindow(QSeriesError):
    """A series carries no known lowest term inside its valid window."""


class NonUnitLead(QSeriesError):
    """Division by a series whose lowest coefficient is not +1 or -1."""


class InsufficientOrder(QSeriesError):
    def __init__(self, message: str, *, required: Fraction, available: Fraction) -> None:
        super().__init__(message)
        self.required = required
        self.available = available


class DivergentProduct(QSeriesError):
    """An infinite product whose factors never leave the window."""


class TruncationUnbounded(QSeriesError):
    """A bilateral or double sum failed to certify its truncation bound."""


class PoleError(QSeriesError):
    """Parameters hit a pole of an Appell-Lerch sum or a theta quotient."""
