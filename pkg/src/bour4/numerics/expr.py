"""Recursive-descent parser and evaluator for profile-curve expressions.

Grammar (whitespace insignificant)::

    expr    := term  (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := '-' unary | power
    power   := primary ('^' unary)?          # right-associative
    primary := NUMBER | 'u' | 'pi' | 'e' | FUNC '(' expr ')' | '(' expr ')'

with FUNC one of sin cos tan sinh cosh tanh asin acos atan asinh acosh atanh
sqrt ln exp abs.  ``^`` binds tighter than unary minus, so ``-u^2`` is
``-(u^2)`` while ``u^-2`` still parses.  Evaluation accepts a float or a
:class:`~bour4.numerics.jets.Jet2`, so parsed expressions come with exact
first and second derivatives.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from ..errors import ParseError
from .jets import CONSTANTS, FUNCTIONS, Jet2
from .scalarfn import ScalarFn

__all__ = ["ExprAst", "parse_expr", "evaluate", "pretty", "expr_scalarfn"]


@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Const:
    name: str


@dataclass(frozen=True)
class Neg:
    arg: "ExprAst"


@dataclass(frozen=True)
class Bin:
    op: str
    left: "ExprAst"
    right: "ExprAst"


@dataclass(frozen=True)
class Call:
    name: str
    arg: "ExprAst"


ExprAst = Union[Num, Var, Const, Neg, Bin, Call]

_NUMBER = re.compile(r"(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?")
_NAME = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch: str):
        if not self.take(ch):
            raise ParseError(f"expected '{ch}'", self.pos, frozenset({ch}))


class _Parser:
    def __init__(self, text: str):
        self.t = _Tokens(text)

    def parse(self) -> ExprAst:
        node = self.expr()
        self.t.skip_ws()
        if self.t.pos != len(self.t.text):
            raise ParseError("unexpected trailing input", self.t.pos,
                             frozenset({"+", "-", "*", "/", "^", "end"}))
        return node

    def expr(self) -> ExprAst:
        node = self.term()
        while True:
            if self.t.take("+"):
                node = Bin("+", node, self.term())
            elif self.t.take("-"):
                node = Bin("-", node, self.term())
            else:
                return node

    def term(self) -> ExprAst:
        node = self.unary()
        while True:
            if self.t.take("*"):
                node = Bin("*", node, self.unary())
            elif self.t.take("/"):
                node = Bin("/", node, self.unary())
            else:
                return node

    def unary(self) -> ExprAst:
        if self.t.take("-"):
            return Neg(self.unary())
        return self.power()

    def power(self) -> ExprAst:
        base = self.primary()
        if self.t.take("^"):
            return Bin("^", base, self.unary())
        return base

    def primary(self) -> ExprAst:
        self.t.skip_ws()
        pos = self.t.pos
        text = self.t.text
        if pos >= len(text):
            raise ParseError("expected operand", pos,
                             frozenset({"number", "u", "function", "("}))
        m = _NUMBER.match(text, pos)
        if m:
            self.t.pos = m.end()
            return Num(float(m.group(0)))
        if text[pos] == "(":
            self.t.pos = pos + 1
            node = self.expr()
            self.t.expect(")")
            return node
        m = _NAME.match(text, pos)
        if m:
            name = m.group(0)
            self.t.pos = m.end()
            if name == "u":
                return Var()
            if name in CONSTANTS:
                return Const(name)
            if name in FUNCTIONS:
                self.t.expect("(")
                node = self.expr()
                self.t.expect(")")
                return Call(name, node)
            raise ParseError(f"unknown name '{name}'", pos,
                             frozenset({"u", "pi", "e", *FUNCTIONS}))
        raise ParseError(f"unexpected character {text[pos]!r}", pos,
                         frozenset({"number", "u", "function", "("}))


def parse_expr(text: str) -> ExprAst:
    """Parse ``text`` into an expression tree; raises :class:`ParseError`."""
    return _Parser(text).parse()


def evaluate(node: ExprAst, u):
    """Evaluate at ``u`` (float or Jet2)."""
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Var):
        return u
    if isinstance(node, Const):
        return CONSTANTS[node.name]
    if isinstance(node, Neg):
        return -evaluate(node.arg, u)
    if isinstance(node, Call):
        return FUNCTIONS[node.name](evaluate(node.arg, u))
    left = evaluate(node.left, u)
    right = evaluate(node.right, u)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    if node.op == "/":
        return left / right
    return left ** right


def pretty(node: ExprAst) -> str:
    """Fully parenthesized rendering; reparsing is evaluation-equivalent."""
    if isinstance(node, Num):
        return repr(node.value)
    if isinstance(node, Var):
        return "u"
    if isinstance(node, Const):
        return node.name
    if isinstance(node, Neg):
        return f"(-{pretty(node.arg)})"
    if isinstance(node, Call):
        return f"{node.name}({pretty(node.arg)})"
    return f"({pretty(node.left)} {node.op} {pretty(node.right)})"


def expr_scalarfn(text: str, interval=(-float("inf"), float("inf"))) -> ScalarFn:
    """Compile an expression string into a ScalarFn with exact derivatives."""
    ast = parse_expr(text)
    return ScalarFn(fn=lambda u: float(evaluate(ast, u)),
                    interval=interval,
                    jet_rule=lambda u: _as_jet(evaluate(ast, Jet2.variable(u))))


def _as_jet(x) -> Jet2:
    return x if isinstance(x, Jet2) else Jet2.constant(x)
