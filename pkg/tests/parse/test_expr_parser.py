from __future__ import annotations

from fractions import Fraction

import pytest

from qrsv.parse import ParseFailure, parse_expr, to_source
from qrsv.parse import ast


def test_sum_of_q_terms() -> None:
    tree = parse_expr("q + q")
    assert tree == ast.BinOp(ast.BinaryOp.ADD, ast.QPower(Fraction(1)), ast.QPower(Fraction(1)))


def test_products_bind_tighter_than_sums() -> None:
    tree = parse_expr("1 + 2*q^3")
    assert tree == ast.BinOp(
        ast.BinaryOp.ADD,
        ast.IntLit(1),
        ast.BinOp(ast.BinaryOp.MUL, ast.IntLit(2), ast.QPower(Fraction(3))),
    )


@pytest.mark.parametrize(
    ("text", "exponent"),
    [("q", Fraction(1)), ("q^-3", Fraction(-3)), ("q^(1/2)", Fraction(1, 2)),
     ("q^(-7/3)", Fraction(-7, 3))],
)
def test_q_powers(text: str, exponent: Fraction) -> None:
    assert parse_expr(text) == ast.QPower(exponent)


def test_negation_and_integer_powers() -> None:
    assert parse_expr("-q^(1/2)") == ast.Neg(ast.QPower(Fraction(1, 2)))
    tree = parse_expr("Jm(1)^-2")
    assert tree == ast.Pow(ast.Call("Jm", ((ast.IntLit(1),),)), -2)


def test_rationals_are_literals() -> None:
    assert parse_expr("3/4") == ast.RatLit(Fraction(3, 4))


def test_call_groups_split_on_semicolons() -> None:
    tree = parse_expr("f(2,3,2; -q^4, -q^5; q^3)")
    assert isinstance(tree, ast.Call)
    assert tree.name == "f"
    assert [len(group) for group in tree.groups] == [3, 2, 1]


def test_poch_accepts_inf_length() -> None:
    tree = parse_expr("poch(q, q^4; 5; inf)")
    assert isinstance(tree, ast.Call)
    assert tree.groups[2] == (ast.Inf(),)


def test_string_argument() -> None:
    tree = parse_expr('nahm("A=[[2]] B=[0]")')
    assert tree == ast.Call("nahm", ((ast.StringLit("A=[[2]] B=[0]"),),))


def test_printed_source_parses_back() -> None:
    tree = parse_expr("-q^(1/2)*f(2,3,2; -q^4, -q^5; q^3) - (1 - q)^2/Jbar(1,6)")
    assert parse_expr(to_source(tree)) == tree


@pytest.mark.parametrize("text", ["(q)^3", "(q^2)^3", "(q^(1/2))^2", "-(q^-1)^2"])
def test_powers_of_q_powers_keep_their_parentheses(text: str) -> None:
    tree = parse_expr(text)
    assert isinstance(tree, ast.Pow | ast.Neg)
    assert parse_expr(to_source(tree)) == tree


def test_power_of_q_prints_with_parentheses() -> None:
    assert to_source(ast.Pow(ast.QPower(Fraction(1)), 3)) == "(q)^3"


def test_spans_point_into_the_source() -> None:
    tree = parse_expr("1 + J(1,3)")
    assert isinstance(tree, ast.BinOp)
    assert tree.right.span.start_offset == 4
    assert tree.right.span.col == 5


def test_incomplete_expression_is_a_parse_error() -> None:
    with pytest.raises(ParseFailure) as info:
        parse_expr("q +")
    assert info.value.diagnostic.code == "QRSV1001"
    assert info.value.diagnostic.message == "parse error"


def test_unbalanced_parenthesis_gets_a_hint() -> None:
    with pytest.raises(ParseFailure) as info:
        parse_expr("(q + 1")
    assert any("Unbalanced parentheses" in hint for hint in info.value.diagnostic.help)


def test_semicolon_outside_a_call_gets_a_hint() -> None:
    with pytest.raises(ParseFailure) as info:
        parse_expr("q; 2")
    assert info.value.offset == 1
    assert any("separates argument groups" in hint for hint in info.value.diagnostic.help)


def test_stray_character_lists_expected_tokens() -> None:
    with pytest.raises(ParseFailure) as info:
        parse_expr("q + $")
    assert info.value.offset == 4
    assert info.value.expected
