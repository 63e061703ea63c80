"""Recursive-descent parser for polynomial and rational-function expressions.

Grammar (whitespace ignored)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | '+' unary | power
    power  := atom ('^' ['-'] INT)?
    atom   := INT | 'X' | 'x' | GEN | '(' expr ')'

GEN is the distinguished generator of the field (``z`` for Q(zeta:k) and
GF(p^e), ``t`` for a radical extension).
"""

from __future__ import annotations

import re

from .errors import DivisionByZero, ParseError
from .field import FieldElement, FieldSpec
from .poly import Polynomial, X
from .rational import RationalFunction

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(0).strip() == "":
            break
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2):
            tokens.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", start)
            tokens.append(("op", ch, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, field: FieldSpec):
        self.field = field
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self) -> RationalFunction:
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return value

    def expr(self):
        value = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in ("*", "/"):
            _, op, pos = self.take()
            rhs = self.unary()
            if op == "*":
                value = value * rhs
            else:
                try:
                    value = value / rhs
                except (DivisionByZero, ZeroDivisionError):
                    raise ParseError("division by zero", pos) from None
        return value

    def unary(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in ("-", "+"):
            self.take()
            value = self.unary()
            return -value if tok[1] == "-" else value
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            sign = 1
            if self.peek()[0] == "op" and self.peek()[1] == "-":
                self.take()
                sign = -1
            tok = self.take()
            if tok[0] != "int":
                raise ParseError("exponent must be an integer literal", tok[2])
            try:
                return base ** (sign * tok[1])
            except (DivisionByZero, ZeroDivisionError):
                raise ParseError("negative power of zero", tok[2]) from None
        return base

    def atom(self):
        kind, value, pos = self.take()
        field = self.field
        if kind == "int":
            return RationalFunction(Polynomial.constant(field, value))
        if kind == "name":
            if value in ("X", "x"):
                return RationalFunction(X(field))
            if value == field.var:
                return RationalFunction(Polynomial.constant(field, field.gen))
            raise ParseError(f"unknown symbol {value!r} for field {field}", pos)
        if kind == "op" and value == "(":
            inner = self.expr()
            tok = self.take()
            if tok[1] != ")":
                raise ParseError("expected ')'", tok[2])
            return inner
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected {value!r}", pos)


def parse_expression(text: str, field: FieldSpec) -> Polynomial | RationalFunction:
    """Parse ``text``; returns a Polynomial when the denominator is constant."""
    value = _Parser(text, field).parse()
    if value.is_polynomial():
        return value.as_polynomial()
    return value


def parse_polynomial(text: str, field: FieldSpec) -> Polynomial:
    value = parse_expression(text, field)
    if not isinstance(value, Polynomial):
        raise ParseError(f"{text!r} is not a polynomial", 0)
    return value


def parse_rational(text: str, field: FieldSpec) -> RationalFunction:
    value = _Parser(text, field).parse()
    return value


def parse_constant(text: str, field: FieldSpec) -> FieldElement:
    value = parse_expression(text, field)
    if not isinstance(value, Polynomial) or value.degree > 0:
        raise ParseError(f"{text!r} is not a constant", 0)
    return value.coeff(0)
