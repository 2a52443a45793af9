from __future__ import annotations

import logging
import time
from collections.abc import Iterable, Mapping
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from qrsv.checks.catalogue import catalogue
from qrsv.checks.types import CheckReport, CheckStatus, IdentityCheck
from qrsv.eval import EvaluationFailure
from qrsv.parse import ParseFailure
from qrsv.series.core import (
    QSeries,
    RationalLike,
    as_fraction,
    equal_to_order,
    scale_for,
    through_order,
)
from qrsv.series.errors import QSeriesError, ScaleError

LOGGER = logging.getLogger(__name__)


class UnknownCheck(LookupError):
    def __init__(self, check_id: str) -> None:
        super().__init__(f"unknown check `{check_id}`")
        self.check_id = check_id


def list_checks() -> list[tuple[str, str, str]]:
    """``(id, description, anchor)`` for every check in catalogue order."""
    return [(check.id, check.description, check.anchor) for check in catalogue()]


def check_ids() -> list[str]:
    return [check.id for check in catalogue()]


def get_check(check_id: str) -> IdentityCheck:
    for check in catalogue():
        if check.id == check_id:
            return check
    raise UnknownCheck(check_id)


def _error_message(exc: Exception) -> str:
    if isinstance(exc, (EvaluationFailure, ParseFailure)):
        return exc.diagnostic.message + "".join(f"; {note}" for note in exc.diagnostic.notes)
    return f"{type(exc).__name__}: {exc}"


def _require_scale(check: IdentityCheck, label: str, side: QSeries) -> None:
    needed = scale_for(*(exponent for exponent, _ in side.terms()))
    if check.scale % needed:
        where = f" in `{label}`" if label else ""
        raise ScaleError(
            f"{check.id}: exponents{where} need scale {needed}, the check is declared at scale "
            f"{check.scale}"
        )


def run_identity(check: IdentityCheck, order: RationalLike | None = None) -> CheckReport:
    """Compare every side pair of ``check`` exactly below ``q^order``.

    The report carries the first failing pair, or the narrowest window seen
    when all pairs agree.
    """
    target = check.default_order if order is None else as_fraction(order)
    if target <= 0:
        raise ValueError(f"order must be positive, got {target}")
    LOGGER.info("Running check %s to order q^%s", check.id, target)
    t0 = time.perf_counter()
    window: Fraction | None = None
    try:
        for pair in check.pairs:
            lhs = through_order(pair.lhs, target)
            rhs = through_order(pair.rhs, target)
            _require_scale(check, pair.label, lhs)
            _require_scale(check, pair.label, rhs)
            outcome = equal_to_order(lhs, rhs, target)
            window = outcome.window if window is None else min(window, outcome.window)
            if not outcome.passed:
                elapsed_ms = (time.perf_counter() - t0) * 1000.0
                LOGGER.info("Check %s failed on pair `%s`", check.id, pair.label)
                return CheckReport(
                    id=check.id,
                    order=target,
                    status=CheckStatus.FAIL,
                    window=outcome.window,
                    mismatch=outcome.mismatch,
                    label=pair.label or None,
                    millis=elapsed_ms,
                )
    except (QSeriesError, EvaluationFailure, ParseFailure, ValueError, ZeroDivisionError) as exc:
        elapsed_ms = (time.perf_counter() - t0) * 1000.0
        LOGGER.warning("Check %s raised %s", check.id, type(exc).__name__)
        return CheckReport(
            id=check.id,
            order=target,
            status=CheckStatus.ERROR,
            window=window,
            message=_error_message(exc),
            millis=elapsed_ms,
        )
    elapsed_ms = (time.perf_counter() - t0) * 1000.0
    LOGGER.info("Check %s passed in %.1f ms", check.id, elapsed_ms)
    return CheckReport(
        id=check.id,
        order=target,
        status=CheckStatus.PASS,
        window=window,
        millis=elapsed_ms,
    )


def run_check(check_id: str, order: RationalLike | None = None) -> CheckReport:
    return run_identity(get_check(check_id), order)


def _run_by_id(job: tuple[str, Fraction | None]) -> CheckReport:
    check_id, order = job
    return run_check(check_id, order)


def run_all(
    *,
    order: RationalLike | None = None,
    overrides: Mapping[str, Fraction] | None = None,
    only: Iterable[str] | None = None,
    jobs: int = 1,
) -> list[CheckReport]:
    """Run the catalogue, or the ``only`` subset, and return reports in catalogue order.

    Per-id ``overrides`` win over ``order``; checks with neither use their
    catalogue default.
    """
    overrides = overrides or {}
    global_order = None if order is None else as_fraction(order)
    if only is None:
        selected = check_ids()
    else:
        wanted = list(dict.fromkeys(only))
        for check_id in wanted:
            get_check(check_id)
        selected = [check_id for check_id in check_ids() if check_id in wanted]
    unknown = sorted(set(overrides) - set(check_ids()))
    if unknown:
        raise UnknownCheck(unknown[0])
    work = [(check_id, overrides.get(check_id, global_order)) for check_id in selected]
    LOGGER.info("Running %d check(s) with %d job(s)", len(work), jobs)
    if jobs <= 1 or len(work) <= 1:
        return [_run_by_id(job) for job in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_by_id, work))
