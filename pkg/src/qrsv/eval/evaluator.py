from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction

from qrsv.diag.diagnostic import Diagnostic, DiagnosticCode, DiagnosticLabel
from qrsv.parse import ast
from qrsv.parse.nahm_spec import parse_nahm_spec
from qrsv.parse.parser import ParseFailure, parse_expr
from qrsv.parse.printer import to_source
from qrsv.series.appell import AppellSpec, appell_m
from qrsv.series.core import (
    Monomial,
    QSeries,
    RationalLike,
    as_fraction,
    monomial_series,
    scale_for,
    through_order,
)
from qrsv.series.errors import InsufficientOrder, QSeriesError
from qrsv.series.hecke import HeckeSpec, hecke_f
from qrsv.series.nahm import nahm_sum
from qrsv.series.qfunctions import (
    J,
    Jbar,
    Jm,
    ThetaSpec,
    inv_poch_reciprocal,
    jtheta,
    poch_finite,
    poch_product,
)

LOGGER = logging.getLogger(__name__)

Number = int | Fraction
Value = Number | Monomial | QSeries

_SIGNATURES = {
    "poch": "poch(a, ...; m; inf|n)",
    "pochn": "pochn(n)",
    "j": "j(z; m)",
    "J": "J(a, m)",
    "Jbar": "Jbar(a, m)",
    "Jm": "Jm(m)",
    "f": "f(a, b, c; x, y; base)",
    "m": "m(x; base; z)",
    "subs": "subs(expr; k)",
    "nahm": 'nahm("A=... B=...")',
}


@dataclass(frozen=True, slots=True)
class EvaluationFailure(Exception):
    diagnostic: Diagnostic
    cause: Exception | None = None

    def __str__(self) -> str:
        return self.diagnostic.message


class _ArgumentError(Exception):
    """Raised for ill-shaped call arguments; reported at the offending node."""

    def __init__(self, node: ast.Expr, message: str) -> None:
        super().__init__(message)
        self.node = node


def _failure(node: ast.Expr, message: str, cause: Exception | None = None) -> EvaluationFailure:
    text = to_source(node)
    notes = [f"while evaluating `{text}`"]
    if isinstance(cause, InsufficientOrder):
        notes.append(f"required q^{cause.required}, reached q^{cause.available}")
    help_lines: list[str] = []
    if isinstance(node, ast.Call) and node.name in _SIGNATURES:
        help_lines.append(f"`{node.name}` is called as `{_SIGNATURES[node.name]}`.")
    return EvaluationFailure(
        Diagnostic(
            code=DiagnosticCode.EVALUATION,
            message=message,
            span=node.span,
            labels=[
                DiagnosticLabel(span=node.span, message="evaluation failed here", is_primary=True)
            ],
            notes=notes,
            help=help_lines,
        ),
        cause,
    )


class Evaluator:
    """Evaluates expression trees to truncated series at a working order."""

    def evaluate(self, node: ast.Expr, order: RationalLike) -> QSeries:
        target = as_fraction(order)
        if target <= 0:
            raise ValueError(f"order must be positive, got {target}")
        try:
            return through_order(lambda working: self.series(node, working), target)
        except InsufficientOrder as exc:
            raise _failure(node, str(exc), exc) from exc

    def series(self, node: ast.Expr, window: Fraction) -> QSeries:
        value = self.value(node, window)
        try:
            return self._promote(node, value, window)
        except _ArgumentError as exc:
            raise _failure(exc.node, str(exc), exc) from exc

    def value(self, node: ast.Expr, window: Fraction) -> Value:
        try:
            return self._dispatch(node, window)
        except EvaluationFailure:
            raise
        except _ArgumentError as exc:
            raise _failure(exc.node, str(exc), exc) from exc
        except (QSeriesError, ValueError, ZeroDivisionError) as exc:
            raise _failure(node, str(exc), exc) from exc

    def _dispatch(self, node: ast.Expr, window: Fraction) -> Value:
        if isinstance(node, ast.IntLit):
            return node.value
        if isinstance(node, ast.RatLit):
            return node.value
        if isinstance(node, ast.QPower):
            return Monomial.q(node.exponent)
        if isinstance(node, ast.Neg):
            return -self.value(node.operand, window)
        if isinstance(node, ast.BinOp):
            return self._binary(node, window)
        if isinstance(node, ast.Pow):
            return self._power(node, window)
        if isinstance(node, ast.Call):
            return self._call(node, window)
        if isinstance(node, ast.Inf):
            raise _ArgumentError(node, "`inf` is only valid as the length argument of `poch`")
        if isinstance(node, ast.StringLit):
            raise _ArgumentError(node, "string literals are only valid as the argument of `nahm`")
        raise _ArgumentError(node, f"unsupported expression node {type(node).__name__}")

    # -- promotion and arithmetic -------------------------------------------

    def _promote(self, node: ast.Expr, value: Value, window: Fraction) -> QSeries:
        if isinstance(value, QSeries):
            return value
        if isinstance(value, Monomial):
            return monomial_series(value, scale_for(value.exponent), window)
        if isinstance(value, Fraction) and value.denominator != 1:
            raise _ArgumentError(
                node, f"the rational {value} is not a series; series coefficients are integers"
            )
        return QSeries.constant(int(value), window)

    def _binary(self, node: ast.BinOp, window: Fraction) -> Value:
        left = self.value(node.left, window)
        right = self.value(node.right, window)
        op = node.op
        if _is_number(left) and _is_number(right):
            return _number_op(op, _as_number(left), _as_number(right))
        if op in (ast.BinaryOp.MUL, ast.BinaryOp.DIV):
            monomial = _monomial_op(op, left, right)
            if monomial is not None:
                return monomial
        lhs = self._promote(node.left, left, window)
        if op is ast.BinaryOp.DIV and isinstance(right, Monomial):
            return lhs.times_monomial(right.inverse())
        rhs = self._promote(node.right, right, window)
        if op is ast.BinaryOp.ADD:
            return lhs + rhs
        if op is ast.BinaryOp.SUB:
            return lhs - rhs
        if op is ast.BinaryOp.MUL:
            return lhs * rhs
        return lhs * rhs.invert()

    def _power(self, node: ast.Pow, window: Fraction) -> Value:
        base = self.value(node.base, window)
        if isinstance(base, Monomial):
            return base**node.exponent
        if _is_number(base):
            return Fraction(_as_number(base)) ** node.exponent
        assert isinstance(base, QSeries)
        return base**node.exponent

    # -- argument coercion ---------------------------------------------------

    def _static(self, node: ast.Expr) -> Number | Monomial:
        value = self.value(node, Fraction(1))
        if isinstance(value, QSeries):
            raise _ArgumentError(node, "expected a number or a monomial, got a series")
        return value

    def _integer(self, node: ast.Expr) -> int:
        value = self._static(node)
        if not _is_number(value) or Fraction(_as_number(value)).denominator != 1:
            raise _ArgumentError(node, "expected an integer")
        return int(_as_number(value))

    def _rational(self, node: ast.Expr) -> Fraction:
        value = self._static(node)
        if not _is_number(value):
            raise _ArgumentError(node, "expected a rational number")
        return Fraction(_as_number(value))

    def _monomial(self, node: ast.Expr) -> Monomial:
        value = self._static(node)
        if isinstance(value, Monomial):
            return value
        if value in (1, -1):
            return Monomial(int(value), Fraction(0))
        raise _ArgumentError(node, "expected a monomial such as `-q^4` or `q^(1/2)`")

    def _base(self, node: ast.Expr) -> Fraction:
        """A base given either as ``q^m`` or as the exponent ``m``."""
        value = self._static(node)
        if isinstance(value, Monomial):
            if value.sign != 1:
                raise _ArgumentError(node, "a base must be a positive power of q")
            return value.exponent
        return Fraction(value)

    # -- function calls ------------------------------------------------------

    def _call(self, node: ast.Call, window: Fraction) -> Value:
        handler = _HANDLERS.get(node.name)
        if handler is None:
            known = ", ".join(sorted(_SIGNATURES))
            raise _ArgumentError(node, f"unknown function `{node.name}` (known: {known})")
        return handler(self, node, window)

    def _groups(self, node: ast.Call, *sizes: int | None) -> tuple[tuple[ast.Expr, ...], ...]:
        if len(node.groups) != len(sizes) or any(
            size is not None and len(group) != size
            for group, size in zip(node.groups, sizes, strict=False)
        ):
            raise _ArgumentError(node, f"wrong arguments for `{node.name}`")
        return node.groups

    def _poch(self, node: ast.Call, window: Fraction) -> Value:
        heads, (step,), (length,) = self._groups(node, None, 1, 1)
        if not heads:
            raise _ArgumentError(node, "`poch` needs at least one parameter")
        parts = [self._monomial(head) for head in heads]
        m = self._base(step)
        if isinstance(length, ast.Inf):
            return poch_product([(a, m) for a in parts], window)
        n = self._integer(length)
        result = QSeries.one(window)
        for a in parts:
            result = result * poch_finite(a, m, n, window)
        return result

    def _pochn(self, node: ast.Call, window: Fraction) -> Value:
        ((n,),) = self._groups(node, 1)
        return inv_poch_reciprocal(self._integer(n), window)

    def _j(self, node: ast.Call, window: Fraction) -> Value:
        (z,), (m,) = self._groups(node, 1, 1)
        return jtheta(ThetaSpec.of(self._monomial(z), self._base(m)), window)

    def _jshort(self, node: ast.Call, window: Fraction) -> Value:
        ((a, m),) = self._groups(node, 2)
        build = J if node.name == "J" else Jbar
        return build(self._rational(a), self._rational(m), window)

    def _jm(self, node: ast.Call, window: Fraction) -> Value:
        ((m,),) = self._groups(node, 1)
        return Jm(self._rational(m), window)

    def _hecke(self, node: ast.Call, window: Fraction) -> Value:
        (a, b, c), (x, y), (base,) = self._groups(node, 3, 2, 1)
        spec = HeckeSpec(
            a=self._integer(a),
            b=self._integer(b),
            c=self._integer(c),
            x=self._monomial(x),
            y=self._monomial(y),
            m=self._base(base),
        )
        return hecke_f(spec, window)

    def _appell(self, node: ast.Call, window: Fraction) -> Value:
        (x,), (base,), (z,) = self._groups(node, 1, 1, 1)
        spec = AppellSpec(x=self._monomial(x), p=self._base(base), z=self._monomial(z))
        return appell_m(spec, window)

    def _subs(self, node: ast.Call, window: Fraction) -> Value:
        (inner,), (k,) = self._groups(node, 1, 1)
        factor = self._rational(k)
        if factor <= 0:
            raise _ArgumentError(k, "the substitution exponent must be positive")
        return self.series(inner, window / factor).rescale(factor)

    def _nahm(self, node: ast.Call, window: Fraction) -> Value:
        ((text,),) = self._groups(node, 1)
        if not isinstance(text, ast.StringLit):
            raise _ArgumentError(text, "`nahm` takes a quoted spec string")
        try:
            spec = parse_nahm_spec(text.value)
        except ParseFailure as exc:
            reason = exc.diagnostic.message
            notes = "; ".join(exc.diagnostic.notes)
            detail = f"{reason} at offset {exc.offset}" + (f" ({notes})" if notes else "")
            raise _ArgumentError(text, detail) from exc
        return nahm_sum(spec, window)


_HANDLERS: dict[str, Callable[[Evaluator, ast.Call, Fraction], Value]] = {
    "poch": Evaluator._poch,
    "pochn": Evaluator._pochn,
    "j": Evaluator._j,
    "J": Evaluator._jshort,
    "Jbar": Evaluator._jshort,
    "Jm": Evaluator._jm,
    "f": Evaluator._hecke,
    "m": Evaluator._appell,
    "subs": Evaluator._subs,
    "nahm": Evaluator._nahm,
}


def _is_number(value: Value) -> bool:
    return isinstance(value, (int, Fraction))


def _as_number(value: Value) -> Number:
    assert isinstance(value, (int, Fraction))
    return value


def _number_op(op: ast.BinaryOp, left: Number, right: Number) -> Number:
    if op is ast.BinaryOp.ADD:
        return left + right
    if op is ast.BinaryOp.SUB:
        return left - right
    if op is ast.BinaryOp.MUL:
        return left * right
    result = Fraction(left) / Fraction(right)
    return int(result) if result.denominator == 1 else result


def _monomial_op(op: ast.BinaryOp, left: Value, right: Value) -> Monomial | None:
    """Products and quotients of monomials and unit numbers stay monomials."""
    def lift(value: Value) -> Monomial | None:
        if isinstance(value, Monomial):
            return value
        if _is_number(value) and value in (1, -1):
            return Monomial(int(_as_number(value)), Fraction(0))
        return None

    a, b = lift(left), lift(right)
    if a is None or b is None:
        return None
    return a * b if op is ast.BinaryOp.MUL else a / b


def evaluate(node: ast.Expr, order: RationalLike) -> QSeries:
    """Evaluate ``node`` exactly below ``q^order``."""
    return Evaluator().evaluate(node, order)


def evaluate_text(text: str, order: RationalLike, filename: str | None = None) -> QSeries:
    return evaluate(parse_expr(text, filename), order)
