from qrsv.diag.diagnostic import Diagnostic, DiagnosticCode, DiagnosticLabel
from qrsv.diag.reporter import DiagnosticReporter
from qrsv.diag.source import SourceText, Span

__all__ = [
    "Diagnostic",
    "DiagnosticCode",
    "DiagnosticLabel",
    "DiagnosticReporter",
    "SourceText",
    "Span",
]
