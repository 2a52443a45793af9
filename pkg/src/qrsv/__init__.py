from qrsv.checks import CheckReport, CheckStatus, list_checks, run_all, run_check
from qrsv.eval import evaluate_text
from qrsv.series import Monomial, NahmSpec, QSeries, equal_to_order, nahm_sum

__all__ = [
    "CheckReport",
    "CheckStatus",
    "Monomial",
    "NahmSpec",
    "QSeries",
    "equal_to_order",
    "evaluate_text",
    "list_checks",
    "nahm_sum",
    "run_all",
    "run_check",
]
