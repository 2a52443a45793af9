from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import cast

from lark import Token, Tree

from qrsv.diag.source import Span
from qrsv.parse import ast

ParseNode = Tree[object] | Token

_BINARY = {
    "add": ast.BinaryOp.ADD,
    "sub": ast.BinaryOp.SUB,
    "mul": ast.BinaryOp.MUL,
    "div": ast.BinaryOp.DIV,
}


def qpow_exponent(text: str) -> Fraction:
    """Exponent of a ``q``, ``q^k`` or ``q^(p/r)`` token."""
    if text == "q":
        return Fraction(1)
    body = text[2:]
    if body.startswith("("):
        body = body[1:-1]
    return Fraction(body)


@dataclass(slots=True)
class ASTBuilder:
    text: str
    filename: str

    def build(self, tree: ParseNode) -> ast.Expr:
        return self._expr(tree)

    def _expr(self, node: ParseNode) -> ast.Expr:
        span = self._span(node)
        if isinstance(node, Token):
            return self._token(node, span)
        data = str(node.data)
        c = [cast(ParseNode, child) for child in node.children]
        if data in _BINARY:
            return ast.BinOp(_BINARY[data], self._expr(c[0]), self._expr(c[1]), span=span)
        if data == "neg":
            return ast.Neg(self._expr(c[0]), span=span)
        if data == "pow":
            return ast.Pow(self._expr(c[0]), int(str(c[1])), span=span)
        if data in {"int_lit", "rat_lit", "qpow", "inf", "string_lit"}:
            return self._token(cast(Token, c[0]), span)
        if data == "call":
            name = str(c[0])
            groups: tuple[tuple[ast.Expr, ...], ...] = ()
            if len(c) > 1:
                args = cast(Tree[object], c[1])
                groups = tuple(
                    tuple(self._expr(cast(ParseNode, e)) for e in cast(Tree[object], g).children)
                    for g in args.children
                )
            return ast.Call(name, groups, span=span)
        if data == "start":
            return self._expr(c[0])
        raise TypeError(f"unexpected parse node {data!r}")

    def _token(self, token: Token, span: Span) -> ast.Expr:
        value = str(token.value)
        if token.type == "INT":
            return ast.IntLit(int(value), span=span)
        if token.type == "RATIONAL":
            return ast.RatLit(Fraction(value), span=span)
        if token.type == "QPOW":
            return ast.QPower(qpow_exponent(value), span=span)
        if token.type == "INF":
            return ast.Inf(span=span)
        if token.type == "STRING":
            return ast.StringLit(value[1:-1], span=span)
        raise TypeError(f"unexpected token {token.type}")

    def _span(self, node: ParseNode) -> Span:
        def _ival(value: int | None, default: int = 0) -> int:
            return default if value is None else value

        if isinstance(node, Tree):
            meta = node.meta
            if getattr(meta, "empty", False):
                return Span(0, 0, 1, 1, 1, 1, self.filename)
            return Span(
                start_offset=_ival(meta.start_pos),
                end_offset=_ival(meta.end_pos),
                line=_ival(meta.line, default=1),
                col=_ival(meta.column, default=1),
                end_line=_ival(meta.end_line, default=1),
                end_col=_ival(meta.end_column, default=1),
                filename=self.filename,
            )
        return Span(
            start_offset=_ival(node.start_pos),
            end_offset=_ival(node.end_pos),
            line=_ival(node.line, default=1),
            col=_ival(node.column, default=1),
            end_line=_ival(node.end_line, default=1),
            end_col=_ival(node.end_column, default=1),
            filename=self.filename,
        )
