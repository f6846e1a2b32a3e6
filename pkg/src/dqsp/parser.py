"""Expression grammar for the CLI and tests.

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' ['-'] integer)?
    atom   := integer ('/' integer)? | 'q' | generator
            | map '(' expr ')' | '(' expr ')'

Multiplication is always explicit (`x xi` is a syntax error): products in a
noncommutative algebra should be visible.  Generators are resolved against
the presentation at parse time; maps are resolved against the availability
table, so e.g. the antipode is rejected outside the extended plane.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from . import calculus, hopf, operators
from .engine import Element
from .scalars import QScalar, qpow
from .tensor import TensorElement

__all__ = ["ParseError", "EvaluationError", "parse_expression", "evaluate",
           "evaluate_text", "available_maps", "MAP_NAMES"]

MAP_NAMES = ("d", "Delta", "S", "eps", "DL", "DR", "Dx", "Dxi", "Dtheta", "Dz")

_MAP_AVAILABILITY = {
    "d": ("dqsp-omega", "dqsp-ops"),
    "Delta": ("dqsp-ext",),
    "S": ("dqsp-ext",),
    "eps": ("dqsp-ext",),
    "DL": ("dqsp-omega",),
    "DR": ("dqsp-omega",),
    "Dx": ("dqsp", "dqsp-omega", "dqsp-ops"),
    "Dxi": ("dqsp", "dqsp-omega", "dqsp-ops"),
    "Dtheta": ("dqsp", "dqsp-omega", "dqsp-ops"),
    "Dz": ("dqsp", "dqsp-omega", "dqsp-ops"),
}


class ParseError(ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class EvaluationError(ValueError):
    pass


def available_maps(pres) -> tuple:
    return tuple(name for name, okay in _MAP_AVAILABILITY.items()
                 if pres.name in okay)


# -- AST ----------------------------------------------------------------------

@dataclass
class ScalarLit:
    value: QScalar


@dataclass
class Gen:
    symbol: str


@dataclass
class Power:
    base: object
    exponent: int


@dataclass
class Product:
    factors: list


@dataclass
class Sum:
    terms: list  # (sign, node) pairs


@dataclass
class Apply:
    map_name: str
    child: object


# -- lexer ---------------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(?P<num>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
                       r"|(?P<op>[+\-*^()/]))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.group("num") is not None:
            tokens.append(("num", int(m.group("num")), m.start()))
        elif m.group("ident") is not None:
            tokens.append(("ident", m.group("ident"), m.start()))
        else:
            tokens.append(("op", m.group("op"), m.start()))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, pres):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.pres = pres
        self.maps = set(available_maps(pres))

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, op):
        kind, value, at = self.peek()
        if kind != "op" or value != op:
            raise ParseError(f"expected {op!r}", at)
        self.advance()

    def parse(self):
        node = self.expr()
        kind, value, at = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected trailing input {value!r}", at)
        return node

    def expr(self):
        terms = []
        sign = 1
        kind, value, _ = self.peek()
        if kind == "op" and value in "+-":
            sign = -1 if value == "-" else 1
            self.advance()
        terms.append((sign, self.term()))
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.advance()
                terms.append((-1 if value == "-" else 1, self.term()))
            else:
                break
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Sum(terms)

    def term(self):
        factors = [self.factor()]
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value == "*":
                self.advance()
                factors.append(self.factor())
            else:
                break
        return factors[0] if len(factors) == 1 else Product(factors)

    def factor(self):
        node = self.atom()
        kind, value, _ = self.peek()
        if kind == "op" and value == "^":
            self.advance()
            node = Power(node, self.signed_integer())
        return node

    def signed_integer(self):
        sign = 1
        kind, value, at = self.peek()
        if kind == "op" and value == "-":
            sign = -1
            self.advance()
            kind, value, at = self.peek()
        if kind != "num":
            raise ParseError("expected an integer exponent", at)
        self.advance()
        return sign * value

    def atom(self):
        kind, value, at = self.advance()
        if kind == "num":
            nk, nv, _ = self.peek()
            if nk == "op" and nv == "/":
                self.advance()
                dk, dv, dat = self.advance()
                if dk != "num" or dv == 0:
                    raise ParseError("expected a nonzero denominator", dat)
                return ScalarLit(QScalar.promote(Fraction(value, dv)))
            return ScalarLit(QScalar.promote(value))
        if kind == "op" and value == "(":
            node = self.expr()
            self.expect_op(")")
            return node
        if kind == "ident":
            nk, nv, _ = self.peek()
            if nk == "op" and nv == "(":
                if value not in MAP_NAMES:
                    raise ParseError(
                        f"{value!r} is not a map (implicit multiplication "
                        "is not supported)", at)
                if value not in self.maps:
                    raise ParseError(
                        f"map {value!r} is not available in {self.pres.name}", at)
                self.advance()
                node = self.expr()
                self.expect_op(")")
                return Apply(value, node)
            if value == "q":
                return ScalarLit(qpow(1))
            if self.pres.has_generator(value):
                return Gen(value)
            raise ParseError(f"unknown generator {value!r} in {self.pres.name}", at)
        raise ParseError(f"unexpected token {value!r}", at)


def parse_expression(text: str, pres):
    """Parse against a presentation; unknown names fail with a position."""
    return _Parser(text, pres).parse()


# -- evaluation -----------------------------------------------------------------

def _mul(a, b):
    if isinstance(a, QScalar):
        if isinstance(b, QScalar):
            return a * b
        return b.scale(a) if isinstance(b, (Element, TensorElement)) else _bad("*", a, b)
    if isinstance(b, QScalar):
        return a.scale(b)
    if isinstance(a, Element) and isinstance(b, Element):
        return a * b
    if isinstance(a, TensorElement) and isinstance(b, TensorElement):
        return a * b
    return _bad("*", a, b)


def _add(a, b, pres, sign):
    if isinstance(a, QScalar) and isinstance(b, QScalar):
        return a + b if sign > 0 else a - b
    if isinstance(a, QScalar):
        a = Element.scalar(pres, a)
    if isinstance(b, QScalar):
        b = Element.scalar(pres, b)
    if type(a) is not type(b):
        return _bad("+", a, b)
    return a + b if sign > 0 else a - b


def _bad(op, a, b):
    raise EvaluationError(
        f"cannot apply {op!r} to {type(a).__name__} and {type(b).__name__}")


def _power(value, n):
    if isinstance(value, QScalar):
        return value ** n
    if isinstance(value, Element):
        if n >= 0:
            return value ** n
        try:
            return value.invert() ** (-n)
        except ValueError as exc:
            raise EvaluationError(str(exc))
    if isinstance(value, TensorElement):
        if n < 0:
            raise EvaluationError("negative tensor powers are not defined")
        out = TensorElement.one(value.presentations)
        for _ in range(n):
            out = out * value
        return out
    return _bad("^", value, n)


def _apply_map(name, value, pres):
    if not isinstance(value, Element):
        raise EvaluationError(f"map {name!r} expects an algebra element")
    if name == "d":
        return calculus.de_rham(value)
    if name == "Delta":
        return hopf.coproduct(value)
    if name == "eps":
        return hopf.counit(value)
    if name == "S":
        return hopf.antipode(value)
    if name == "DL":
        return calculus.coaction("left", value)
    if name == "DR":
        return calculus.coaction("right", value)
    if name in operators.PARTIAL_SYMBOLS:
        return operators.apply_partial(name, value)
    raise EvaluationError(f"unknown map {name!r}")


def evaluate(node, pres):
    """Evaluate an AST; the result is an Element, TensorElement or QScalar."""
    if isinstance(node, ScalarLit):
        return node.value
    if isinstance(node, Gen):
        return Element.from_generator(pres, node.symbol)
    if isinstance(node, Power):
        return _power(evaluate(node.base, pres), node.exponent)
    if isinstance(node, Product):
        value = evaluate(node.factors[0], pres)
        for factor in node.factors[1:]:
            value = _mul(value, evaluate(factor, pres))
        return value
    if isinstance(node, Sum):
        sign0, first = node.terms[0]
        value = evaluate(first, pres)
        if sign0 < 0:
            value = value.scale(-1) if not isinstance(value, QScalar) else -value
        for sign, term in node.terms[1:]:
            value = _add(value, evaluate(term, pres), pres, sign)
        return value
    if isinstance(node, Apply):
        inner = evaluate(node.child, pres)
        if isinstance(inner, QScalar):
            inner = Element.scalar(pres, inner)
        try:
            return _apply_map(node.map_name, inner, pres)
        except ValueError as exc:
            if isinstance(exc, EvaluationError):
                raise
            raise EvaluationError(str(exc))
    raise EvaluationError(f"cannot evaluate node {node!r}")


def evaluate_text(text: str, pres):
    return evaluate(parse_expression(text, pres), pres)
