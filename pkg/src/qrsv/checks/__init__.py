from qrsv.checks.catalogue import catalogue
from qrsv.checks.registry import (
    UnknownCheck,
    check_ids,
    get_check,
    list_checks,
    run_all,
    run_check,
    run_identity,
)
from qrsv.checks.types import CheckReport, CheckStatus, IdentityCheck, SidePair

__all__ = [
    "CheckReport",
    "CheckStatus",
    "IdentityCheck",
    "SidePair",
    "UnknownCheck",
    "catalogue",
    "check_ids",
    "get_check",
    "list_checks",
    "run_all",
    "run_check",
    "run_identity",
]
