from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from qrsv.diag.source import Span


class DiagnosticCode(str, Enum):
    """Stable error codes, grouped by leading digit."""

    PARSE = "QRSV1001"
    NAHM_SPEC = "QRSV1002"
    EVALUATION = "QRSV2001"
    UNKNOWN_CHECK = "QRSV3001"
    INVALID_OPTION = "QRSV4001"
    CONFIG_LOAD = "QRSV4002"
    OUTPUT_WRITE = "QRSV4003"



@dataclass(frozen=True, slots=True)
class DiagnosticLabel:
    span: Span
    message: str | None = None
    is_primary: bool = False


@dataclass(frozen=True, slots=True)
class Diagnostic:
    """A user-facing error pinned to a span of an expression, spec or CLI argument."""

    code: DiagnosticCode
    message: str
    span: Span
    labels: list[DiagnosticLabel] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    help: list[str] = field(default_factory=list)

    @property
    def header(self) -> str:
        return f"error[{self.code.value}]: {self.message}"
