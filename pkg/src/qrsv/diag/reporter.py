from __future__ import annotations

from collections.abc import Sequence

from rich.console import Console
from rich.text import Text

from qrsv.diag.diagnostic import Diagnostic, DiagnosticLabel
from qrsv.diag.source import SourceText, Span


class DiagnosticReporter:
    TAB_SIZE = 4

    def __init__(self, console: Console | None = None) -> None:
        self.console = console or Console(stderr=True)

    def render_text(self, source: SourceText | None, diag: Diagnostic) -> str:
        lines = [
            diag.header,
            f"  --> {diag.span.filename}:{max(1, diag.span.line)}:{max(1, diag.span.col)}",
        ]
        if source is not None and source.filename == diag.span.filename:
            lines.append("   |")
            for idx, label in enumerate(self._labels_for(diag)):
                if idx:
                    lines.append("   |")
                lines.extend(self._render_label(source, label))
        lines.extend(f"   = note: {n}" for n in diag.notes)
        lines.extend(f"   = help: {h}" for h in diag.help)
        return "\n".join(lines)

    def print(self, source: SourceText | None, diagnostics: Sequence[Diagnostic]) -> None:
        ordered = sorted(
            enumerate(diagnostics),
            key=lambda item: (item[1].span.start_offset, item[0]),
        )
        for _, diag in ordered:
            self.console.print(Text(self.render_text(source, diag), style="red"))
            self.console.print()
        if diagnostics:
            self.console.print(self.render_summary(diagnostics))

    def render_summary(self, diagnostics: Sequence[Diagnostic]) -> str:
        return f"aborting due to {len(diagnostics)} error(s)"

    def _labels_for(self, diag: Diagnostic) -> list[DiagnosticLabel]:
        labels = list(diag.labels)
        if not any(label.is_primary for label in labels):
            labels.insert(0, DiagnosticLabel(span=diag.span, is_primary=True))
        return sorted(labels, key=lambda label: label.span.start_offset)

    def _render_label(self, source: SourceText, label: DiagnosticLabel) -> list[str]:
        span = label.span
        line_no = max(1, min(span.line, source.line_count))
        raw = source.line_text(line_no)
        start, end = self._columns(raw, span, line_no)
        marker_char = "^" if label.is_primary else "-"
        marker = " " * self._visual(raw, start) + marker_char * max(
            1, self._visual(raw, end) - self._visual(raw, start)
        )
        rendered = [f"{line_no:>3} | {raw.expandtabs(self.TAB_SIZE)}"]
        rendered.append(f"   | {marker} {label.message}" if label.message else f"   | {marker}")
        return rendered

    def _columns(self, raw: str, span: Span, line_no: int) -> tuple[int, int]:
        limit = len(raw) + 1
        start = min(limit, max(1, span.col)) if line_no == span.line else 1
        end = span.end_col if line_no == span.end_line else limit
        end = min(limit + 1, max(start + 1, end))
        return start, end

    def _visual(self, raw: str, col: int) -> int:
        return len(raw[: max(0, col - 1)].expandtabs(self.TAB_SIZE))
