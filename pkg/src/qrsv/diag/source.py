from __future__ import annotations

import bisect
from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class Span:
    start_offset: int
    end_offset: int
    line: int
    col: int
    end_line: int
    end_col: int
    filename: str = "<input>"


class SourceText:
    """In-memory source of an expression or spec string."""

    def __init__(self, text: str, filename: str = "<input>") -> None:
        self.text = text
        self.filename = filename
        self._lines = text.split("\n")
        self._starts = [0]
        for line in self._lines[:-1]:
            self._starts.append(self._starts[-1] + len(line) + 1)

    @property
    def line_count(self) -> int:
        return len(self._lines)

    def line_text(self, line: int) -> str:
        if line < 1 or line > len(self._lines):
            return ""
        return self._lines[line - 1].rstrip("\r")

    def position(self, offset: int) -> tuple[int, int]:
        """1-based ``(line, col)`` of a character offset, clamped to the text."""
        offset = max(0, min(offset, len(self.text)))
        index = bisect.bisect_right(self._starts, offset) - 1
        return index + 1, offset - self._starts[index] + 1

    def span(self, start: int, end: int | None = None) -> Span:
        stop = start + 1 if end is None else max(end, start + 1)
        line, col = self.position(start)
        end_line, end_col = self.position(stop)
        if end_line == line and end_col <= col:
            end_col = col + 1
        return Span(
            start_offset=start,
            end_offset=stop,
            line=line,
            col=col,
            end_line=end_line,
            end_col=end_col,
            filename=self.filename,
        )
