from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import cast

from lark import Lark, Tree
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput

from qrsv.diag.diagnostic import Diagnostic, DiagnosticCode, DiagnosticLabel
from qrsv.diag.source import SourceText
from qrsv.parse import ast
from qrsv.parse.ast_builder import ASTBuilder

_EXPECTED_TOKEN_NAMES = {
    "LPAR": "`(`",
    "RPAR": "`)`",
    "SEMICOLON": "`;`",
    "COMMA": "`,`",
    "PLUS": "`+`",
    "MINUS": "`-`",
    "STAR": "`*`",
    "SLASH": "`/`",
    "CIRCUMFLEX": "`^`",
    "INT": "integer",
    "SIGNED_INT": "integer",
    "RATIONAL": "rational",
    "QPOW": "`q`",
    "INF": "`inf`",
    "NAME": "function name",
    "STRING": "string",
    "$END": "end of input",
}


@dataclass(frozen=True, slots=True)
class ParseFailure(Exception):
    diagnostic: Diagnostic

    def __str__(self) -> str:
        return f"{self.diagnostic.message} at offset {self.offset}"

    @property
    def offset(self) -> int:
        return self.diagnostic.span.start_offset

    @property
    def expected(self) -> tuple[str, ...]:
        for note in self.diagnostic.notes:
            if note.startswith("expected one of: "):
                return tuple(note.removeprefix("expected one of: ").split(", "))
        return ()


@lru_cache(maxsize=1)
def _parser() -> Lark:
    grammar = Path(__file__).with_name("grammar.lark").read_text(encoding="utf-8")
    return Lark(
        grammar,
        parser="lalr",
        lexer="contextual",
        propagate_positions=True,
        maybe_placeholders=False,
        start="start",
    )


def _friendly_expected(expected: list[str]) -> list[str]:
    normalized = [_EXPECTED_TOKEN_NAMES.get(token, token.lower()) for token in expected]
    return list(dict.fromkeys(normalized))


def _expected_note(expected: list[str]) -> str | None:
    if not expected:
        return None
    return f"expected one of: {', '.join(sorted(_friendly_expected(expected)))}"


def unmatched_open_paren(text: str, end: int) -> int | None:
    """Offset of the innermost ``(`` left open before ``end``."""
    stack: list[int] = []
    in_string = False
    for offset, char in enumerate(text[:end]):
        if char == '"':
            in_string = not in_string
        elif in_string:
            continue
        elif char == "(":
            stack.append(offset)
        elif char == ")" and stack:
            stack.pop()
    return stack[-1] if stack else None


def parse_tree(text: str, filename: str | None = None) -> Tree[object]:
    source = SourceText(text, filename or "<expr>")
    try:
        return cast(Tree[object], _parser().parse(text))
    except UnexpectedInput as exc:
        expected: list[str] = []
        if isinstance(exc, UnexpectedCharacters):
            expected = sorted(exc.allowed or [])
        elif hasattr(exc, "expected") and exc.expected:
            expected = sorted(exc.expected)
        pos = exc.pos_in_stream
        if isinstance(exc, UnexpectedEOF) or pos is None or pos < 0:
            pos = len(text)
        raise ParseFailure(_syntax_diagnostic(source, pos, expected)) from exc


def _opens_call(text: str, opener: int | None) -> bool:
    if opener is None:
        return False
    before = text[:opener].rstrip()
    return bool(before) and (before[-1].isalnum() or before[-1] == "_")


def _syntax_diagnostic(source: SourceText, pos: int, expected: list[str]) -> Diagnostic:
    notes: list[str] = []
    expected_note = _expected_note(expected)
    if expected_note is not None:
        notes.append(expected_note)
    labels: list[DiagnosticLabel] = []
    hints: list[str] = []
    opener = unmatched_open_paren(source.text, pos)
    if opener is not None and source.text.count("(") != source.text.count(")"):
        hints.append("Unbalanced parentheses: close every `(` before the end of the expression.")
        labels.append(
            DiagnosticLabel(span=source.span(opener), message="unclosed `(` opened here")
        )
    if source.text[pos : pos + 1] == ";" and not _opens_call(source.text, opener):
        hints.append("`;` separates argument groups and is only valid inside a function call.")
    span = source.span(pos)
    labels.append(DiagnosticLabel(span=span, message="unexpected input", is_primary=True))
    return Diagnostic(
        code=DiagnosticCode.PARSE,
        message="parse error",
        span=span,
        labels=labels,
        notes=notes,
        help=hints,
    )


def parse_expr(text: str, filename: str | None = None) -> ast.Expr:
    actual_name = filename or "<expr>"
    tree = parse_tree(text, actual_name)
    return ASTBuilder(text=text, filename=actual_name).build(tree)
