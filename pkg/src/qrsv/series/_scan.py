from __future__ import annotations

import math
from collections.abc import Callable
from fractions import Fraction

from qrsv.series.errors import TruncationUnbounded

PATIENCE = 3


def safety_radius(window: Fraction, base: Fraction, linear: Fraction = Fraction(0)) -> int:
    """Hard cap on ``|index|`` for any truncated bilateral scan."""
    reach = max(math.ceil(abs(window) / base), 1)
    return 10 * math.isqrt(reach) + 50 + math.ceil(abs(linear) / base)


def scan_rows(
    start: int,
    direction: int,
    row_minimum: Callable[[int], Fraction | None],
    visit: Callable[[int], None],
    window: Fraction,
    radius: int,
    *,
    what: str,
) -> int:
    """Visit rows ``start, start + direction, ...`` until the minimum leaves the window.

    Stops after ``PATIENCE`` consecutive rows whose minimum is at or above
    ``window`` without decreasing. A row minimum of ``None`` marks a row that
    holds no terms yet; it is skipped and never counts toward the stop.
    Returns the last index visited.
    """
    index = start
    streak = 0
    previous: Fraction | None = None
    last = start
    while True:
        if abs(index) > radius:
            raise TruncationUnbounded(
                f"{what}: row {index} passed the safety radius {radius} below q^{window}"
            )
        low = row_minimum(index)
        if low is None:
            index += direction
            continue
        if low < window:
            visit(index)
            last = index
            streak = 0
        elif previous is not None and low < previous:
            streak = 1
        else:
            streak += 1
        previous = low
        if streak >= PATIENCE:
            return last
        index += direction


def convex_span(
    vertex: Fraction,
    low: int | None,
    high: int | None,
) -> int:
    """Integer nearest the vertex from above, clamped to ``[low, high]``."""
    start = math.ceil(vertex)
    if low is not None and start < low:
        start = low
    if high is not None and start > high:
        start = high
    return start
