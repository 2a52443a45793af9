from __future__ import annotations

from fractions import Fraction

from qrsv.parse import ast


def _rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _qpower(exponent: Fraction) -> str:
    if exponent == 1:
        return "q"
    if exponent.denominator == 1:
        return f"q^{exponent.numerator}"
    return f"q^({_rational(exponent)})"


def _is_atomic(node: ast.Expr) -> bool:
    if isinstance(node, ast.IntLit | ast.QPower | ast.Inf | ast.StringLit | ast.Call):
        return True
    return False


def _wrapped(node: ast.Expr) -> str:
    text = to_source(node)
    return text if _is_atomic(node) else f"({text})"


def to_source(node: ast.Expr) -> str:
    """Render an expression so that parsing the text yields the same tree."""
    match node:
        case ast.IntLit(value=value):
            return str(value)
        case ast.RatLit(value=value):
            return f"{value.numerator}/{value.denominator}"
        case ast.QPower(exponent=exponent):
            return _qpower(exponent)
        case ast.Inf():
            return "inf"
        case ast.StringLit(value=value):
            return f'"{value}"'
        case ast.Neg(operand=operand):
            return f"-{_wrapped(operand)}"
        case ast.BinOp(op=op, left=left, right=right):
            return f"{_wrapped(left)} {op.value} {_wrapped(right)}"
        case ast.Pow(base=ast.QPower() as base, exponent=exponent):
            # `q^a^n` would lex as a single q-power
            return f"({to_source(base)})^{exponent}"
        case ast.Pow(base=base, exponent=exponent):
            return f"{_wrapped(base)}^{exponent}"
        case ast.Call(name=name, groups=groups):
            inner = "; ".join(", ".join(to_source(arg) for arg in group) for group in groups)
            return f"{name}({inner})"
    raise TypeError(f"cannot print {type(node).__name__}")
