from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import cast

from lark import Lark, Token, Tree
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput

from qrsv.diag.diagnostic import Diagnostic, DiagnosticCode, DiagnosticLabel
from qrsv.diag.source import SourceText
from qrsv.parse.parser import ParseFailure
from qrsv.series.nahm import NahmSpec

_KEYS = ("A", "B", "C", "v", "L")

Value = Fraction | list[Fraction] | list[list[Fraction]]


@lru_cache(maxsize=1)
def _parser() -> Lark:
    grammar = Path(__file__).with_name("nahm_spec.lark").read_text(encoding="utf-8")
    return Lark(grammar, parser="lalr", lexer="contextual", propagate_positions=True)


def _failure(
    source: SourceText, start: int, end: int | None, message: str, **extra: str
) -> ParseFailure:
    span = source.span(start, end)
    return ParseFailure(
        Diagnostic(
            code=DiagnosticCode.NAHM_SPEC,
            message=message,
            span=span,
            labels=[DiagnosticLabel(span=span, message=extra.get("label"), is_primary=True)],
            notes=[extra["note"]] if "note" in extra else [],
            help=["Write specs like `A=[[0,1/2],[1/2,0]] B=[1/2,1/2] v=[0,0] L=[[2,0],[0,2]]`."],
        )
    )


def _number(tree: Tree[object]) -> Fraction:
    parts = [str(tok) for tok in tree.children if isinstance(tok, Token)]
    negative = parts[0] == "-"
    digits = parts[1:] if negative else parts
    value = Fraction(int(digits[0]), int(digits[1]) if len(digits) > 1 else 1)
    return -value if negative else value


def _value(node: Tree[object]) -> Value:
    if node.data == "number":
        return _number(node)
    if node.data == "vector":
        return [_number(cast(Tree[object], child)) for child in node.children]
    return [cast(list[Fraction], _value(cast(Tree[object], child))) for child in node.children]


def _integers(values: list[Fraction], what: str) -> tuple[int, ...]:
    if any(v.denominator != 1 for v in values):
        raise ValueError(f"{what} must have integer entries")
    return tuple(int(v) for v in values)


def parse_nahm_spec(text: str, filename: str | None = None) -> NahmSpec:
    """Parse the ``KEY=value`` text form of a partial Nahm sum."""
    source = SourceText(text, filename or "<nahm-spec>")
    try:
        tree = _parser().parse(text)
    except UnexpectedInput as exc:
        pos = exc.pos_in_stream
        if isinstance(exc, UnexpectedEOF) or pos is None or pos < 0:
            pos = len(text)
        expected = sorted(exc.allowed or []) if isinstance(exc, UnexpectedCharacters) else []
        note = f"expected one of: {', '.join(expected)}" if expected else None
        extra = {"note": note} if note else {}
        raise _failure(source, pos, None, "malformed Nahm spec", **extra) from exc

    entries: dict[str, tuple[Value, int, int]] = {}
    for entry in tree.children:
        entry_tree = cast(Tree[object], entry)
        key_token = cast(Token, entry_tree.children[0])
        key = str(key_token)
        start = key_token.start_pos or 0
        end = entry_tree.meta.end_pos if not entry_tree.meta.empty else start + len(key)
        if key not in _KEYS:
            raise _failure(source, start, start + len(key), f"unknown Nahm spec key `{key}`",
                           note=f"valid keys: {', '.join(_KEYS)}")
        if key in entries:
            raise _failure(source, start, start + len(key), f"duplicate Nahm spec key `{key}`")
        entries[key] = (_value(cast(Tree[object], entry_tree.children[1])), start, end)

    for required in ("A", "B"):
        if required not in entries:
            raise _failure(source, 0, len(text), f"Nahm spec is missing `{required}`")

    def shaped(key: str, depth: int) -> Value:
        value, start, end = entries[key]
        ok = (
            isinstance(value, Fraction)
            if depth == 0
            else isinstance(value, list)
            and all((isinstance(x, list) if depth == 2 else isinstance(x, Fraction)) for x in value)
        )
        if not ok:
            shape = ("a number", "a vector", "a matrix")[depth]
            raise _failure(source, start, end, f"`{key}` must be {shape}")
        return value

    try:
        A = cast(list[list[Fraction]], shaped("A", 2))
        B = cast(list[Fraction], shaped("B", 1))
        C = cast(Fraction, shaped("C", 0)) if "C" in entries else Fraction(0)
        v = _integers(cast(list[Fraction], shaped("v", 1)), "v") if "v" in entries else None
        L = (
            tuple(_integers(g, "L") for g in cast(list[list[Fraction]], shaped("L", 2)))
            if "L" in entries
            else None
        )
        return NahmSpec(A=tuple(tuple(row) for row in A), B=tuple(B), C=C, v=v, L=L)
    except ValueError as exc:
        raise _failure(source, 0, len(text), "invalid Nahm spec", note=str(exc)) from exc
