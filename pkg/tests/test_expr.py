import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bour4.errors import ParseError
from bour4.numerics import (Jet2, evaluate, expr_scalarfn, parse_expr, pretty)


def ev(text, u):
    return evaluate(parse_expr(text), u)


def test_basic_examples():
    assert ev("u^2 + 1", 2.0) == 5.0
    assert abs(ev("sqrt(u*u - 1)", 2.0) - math.sqrt(3)) < 1e-12
    assert ev("2*u + 3", 0.5) == 4.0


def test_unbalanced_paren_offset():
    with pytest.raises(ParseError) as exc:
        parse_expr("sin(")
    assert exc.value.offset == 4
    assert exc.value.expected


def test_error_offsets_and_expected():
    with pytest.raises(ParseError) as exc:
        parse_expr("1 + * 2")
    assert exc.value.offset == 4
    with pytest.raises(ParseError) as exc:
        parse_expr("foo(u)")
    assert exc.value.offset == 0
    assert "u" in exc.value.expected
    with pytest.raises(ParseError) as exc:
        parse_expr("1 2")
    assert exc.value.offset == 2
    with pytest.raises(ParseError) as exc:
        parse_expr("(1 + 2")
    assert exc.value.offset == 6


def test_precedence_and_associativity():
    assert ev("2 + 3 * 4", 0.0) == 14.0
    assert ev("2 * 3 ^ 2", 0.0) == 18.0
    assert ev("-u^2", 3.0) == -9.0          # unary minus below ^
    assert ev("u^-1", 4.0) == 0.25          # signed exponent
    assert ev("2^3^2", 0.0) == 512.0        # right associative
    assert ev("1 - 2 - 3", 0.0) == -4.0     # left associative
    assert ev("8 / 4 / 2", 0.0) == 1.0


def test_constants_and_functions():
    assert abs(ev("pi", 0.0) - math.pi) < 1e-15
    assert abs(ev("e", 0.0) - math.e) < 1e-15
    assert abs(ev("ln(e)", 0.0) - 1.0) < 1e-15
    assert abs(ev("abs(-u)", 2.5) - 2.5) < 1e-15
    assert abs(ev("atanh(tanh(u))", 0.7) - 0.7) < 1e-12


def test_whitespace_insignificant():
    assert ev("  u ^ 2+ 1 ", 2.0) == ev("u^2+1", 2.0)


def test_scientific_notation():
    assert ev("1e-2 + u", 0.0) == 0.01
    assert ev("2.5E3", 0.0) == 2500.0
    assert ev(".5*u", 4.0) == 2.0


_LEAVES = st.sampled_from(["u", "pi", "e", "0.5", "2", "1.25"])
_UNARY = st.sampled_from(["sin", "cos", "tanh", "exp", "abs"])


def _exprs(depth=3):
    if depth == 0:
        return _LEAVES
    sub = _exprs(depth - 1)
    return st.one_of(
        _LEAVES,
        st.tuples(st.sampled_from("+-*"), sub, sub).map(
            lambda t: f"({t[1]} {t[0]} {t[2]})"),
        st.tuples(_UNARY, sub).map(lambda t: f"{t[0]}({t[1]})"),
    )


@settings(max_examples=120, deadline=None)
@given(_exprs(), st.floats(min_value=-3, max_value=3, allow_nan=False))
def test_pretty_roundtrip(text, u):
    ast = parse_expr(text)
    again = parse_expr(pretty(ast))
    v1, v2 = evaluate(ast, u), evaluate(again, u)
    assert abs(v1 - v2) <= 1e-12 * (1.0 + abs(v1))


def test_jet_evaluation_matches_derivatives():
    fn = expr_scalarfn("sin(u)*u^2 + ln(u)", (0.1, 10.0))
    u = 1.3
    assert abs(fn(u) - (math.sin(u) * u * u + math.log(u))) < 1e-14
    d1 = math.cos(u) * u * u + 2 * u * math.sin(u) + 1 / u
    d2 = (-math.sin(u) * u * u + 4 * u * math.cos(u) + 2 * math.sin(u)
          - 1 / u ** 2)
    assert abs(fn.d1(u) - d1) < 1e-12
    assert abs(fn.d2(u) - d2) < 1e-11
