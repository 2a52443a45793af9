from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from qrsv.diag.source import Span

_NOWHERE = Span(0, 0, 1, 1, 1, 1)


@dataclass(frozen=True, slots=True)
class Node:
    span: Span = field(default=_NOWHERE, compare=False, repr=False, kw_only=True)


class Expr(Node):
    pass


class BinaryOp(str, Enum):
    ADD = "+"
    SUB = "-"
    MUL = "*"
    DIV = "/"


@dataclass(frozen=True, slots=True)
class IntLit(Expr):
    value: int


@dataclass(frozen=True, slots=True)
class RatLit(Expr):
    value: Fraction


@dataclass(frozen=True, slots=True)
class QPower(Expr):
    """``q^exponent``."""

    exponent: Fraction


@dataclass(frozen=True, slots=True)
class Inf(Expr):
    pass


@dataclass(frozen=True, slots=True)
class StringLit(Expr):
    value: str


@dataclass(frozen=True, slots=True)
class Neg(Expr):
    operand: Expr


@dataclass(frozen=True, slots=True)
class BinOp(Expr):
    op: BinaryOp
    left: Expr
    right: Expr


@dataclass(frozen=True, slots=True)
class Pow(Expr):
    base: Expr
    exponent: int


@dataclass(frozen=True, slots=True)
class Call(Expr):
    """``name(g1; g2; ...)`` where each group is a comma-separated list."""

    name: str
    groups: tuple[tuple[Expr, ...], ...]
