"""Text syntax for chain elements, Hahn elements, series and expressions.

::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := ['-'] (scalar | 't^{' hahn '}' | 'log(' expr ')'
                     | 'exp(' expr ')' | '(' expr ')')
    hahn   := '{' coeff '@' chain (',' coeff '@' chain)* '}' | '0'
    chain  := '(' nat ';' int ';' rational ')' | 'L' hahn

A scalar is an integer, ``p/q``, or a decimal literal with optional
exponent.  Rendering produces text that parses back to the same value.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .chain import DEFAULT_MAX_STAGE, BaseElement, Lifted, iota_inv
from .hahn import HahnElement
from .scalar import RATIONAL, Backend
from .series import Series


class ParseError(ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


_NUMBER = re.compile(r"\d+(?:\.\d*)?(?:[eE][+-]?\d+)?(?:/\d+)?|\.\d+(?:[eE][+-]?\d+)?")


# -- rendering ---------------------------------------------------------------

def render_chain(x) -> str:
    if isinstance(x, BaseElement):
        return f"({x.fiber};{x.level};{x.offset})"
    return "L" + render_hahn(x.g)


def render_hahn(g: HahnElement) -> str:
    if g.is_zero():
        return "0"
    return "{" + ", ".join(f"{c}@{render_chain(k)}" for k, c in g.terms) + "}"


def _coeff_text(c, with_unit: bool) -> str:
    txt = str(c)
    if with_unit and c == 1:
        return ""
    if with_unit and c == -1:
        return "-"
    return txt


def render_series(s: Series) -> str:
    if s.is_zero():
        return "0"
    parts = []
    for i, (g, c) in enumerate(s.terms):
        negative = c < 0
        mag = -c if (negative and i > 0) else c
        if g.is_zero():
            body = str(mag)
        else:
            prefix = _coeff_text(mag, True)
            mono = "t^{" + render_hahn(g) + "}"
            if prefix in ("", "-"):
                body = prefix + mono
            else:
                body = prefix + "*" + mono
        if i == 0:
            parts.append(body)
        else:
            parts.append((" - " if negative else " + ") + body)
    return "".join(parts)


# -- parsing -----------------------------------------------------------------

@dataclass
class Node:
    kind: str
    start: int
    end: int
    value: object = None
    args: tuple = ()


class Parser:
    def __init__(self, text: str, backend: Backend = RATIONAL,
                 max_stage: Optional[int] = DEFAULT_MAX_STAGE):
        self.text = text
        self.pos = 0
        self.backend = backend
        self.max_stage = max_stage

    # low level
    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, s: str) -> bool:
        self._skip()
        return self.text.startswith(s, self.pos)

    def expect(self, s: str):
        if not self.peek(s):
            found = self.text[self.pos:self.pos + 8] or "end of input"
            raise ParseError(f"expected {s!r}, found {found!r}", self.pos)
        self.pos += len(s)

    def accept(self, s: str) -> bool:
        if self.peek(s):
            self.pos += len(s)
            return True
        return False

    def at_end(self) -> bool:
        self._skip()
        return self.pos >= len(self.text)

    def number_text(self) -> str:
        self._skip()
        m = _NUMBER.match(self.text, self.pos)
        if not m:
            raise ParseError("expected a number", self.pos)
        self.pos = m.end()
        return m.group(0)

    def signed_rational(self) -> Fraction:
        sign = -1 if self.accept("-") else 1
        if sign == 1:
            self.accept("+")
        txt = self.number_text()
        try:
            return sign * Fraction(txt)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational {txt!r}", self.pos) from exc

    def integer(self) -> int:
        start = self.pos
        q = self.signed_rational()
        if q.denominator != 1:
            raise ParseError("expected an integer", start)
        return int(q)

    # grammar
    def chain(self):
        self._skip()
        start = self.pos
        if self.accept("L"):
            g = self.hahn()
            try:
                return iota_inv(g, self.max_stage)
            except ValueError as exc:
                raise ParseError(str(exc), start) from exc
        self.expect("(")
        fiber = self.integer()
        if fiber < 0:
            raise ParseError("fiber must be a natural number", start)
        self.expect(";")
        level = self.integer()
        self.expect(";")
        offset = self.signed_rational()
        self.expect(")")
        return BaseElement(fiber, level, offset)

    def hahn(self) -> HahnElement:
        self._skip()
        if self.accept("0"):
            return HahnElement.zero()
        self.expect("{")
        terms = []
        while True:
            c = self.signed_rational()
            self.expect("@")
            terms.append((self.chain(), c))
            if not self.accept(","):
                break
        self.expect("}")
        return HahnElement(terms)

    def expr(self) -> Node:
        self._skip()
        start = self.pos
        node = self.term()
        while True:
            if self.accept("+"):
                node = Node("add", start, self.pos, args=(node, self.term()))
            elif self.accept("-"):
                node = Node("sub", start, self.pos, args=(node, self.term()))
            else:
                break
            node.end = self.pos
        return node

    def term(self) -> Node:
        self._skip()
        start = self.pos
        node = self.factor()
        while self.accept("*"):
            node = Node("mul", start, 0, args=(node, self.factor()))
            node.end = self.pos
        return node

    def factor(self) -> Node:
        self._skip()
        start = self.pos
        if self.accept("-"):
            inner = self.factor()
            return Node("neg", start, self.pos, args=(inner,))
        for fn in ("log", "exp"):
            if self.accept(fn + "("):
                inner = self.expr()
                self.expect(")")
                return Node(fn, start, self.pos, args=(inner,))
        if self.accept("t^{"):
            g = self.hahn()
            self.expect("}")
            return Node("const", start, self.pos, value=Series.monomial(g, self.backend.coerce(1)))
        if self.accept("("):
            inner = self.expr()
            self.expect(")")
            return inner
        txt = self.number_text()
        try:
            value = self.backend.parse(txt)
        except (ValueError, ArithmeticError) as exc:
            raise ParseError(f"bad scalar {txt!r}", start) from exc
        return Node("const", start, self.pos, value=Series.constant(value))


def _finish(parser: Parser, result):
    if not parser.at_end():
        raise ParseError(f"unexpected {parser.text[parser.pos]!r}", parser.pos)
    return result


def parse_chain(text: str, max_stage: Optional[int] = DEFAULT_MAX_STAGE):
    p = Parser(text, max_stage=max_stage)
    return _finish(p, p.chain())


def parse_hahn(text: str, max_stage: Optional[int] = DEFAULT_MAX_STAGE) -> HahnElement:
    p = Parser(text, max_stage=max_stage)
    return _finish(p, p.hahn())


def parse_expr(text: str, backend: Backend = RATIONAL,
               max_stage: Optional[int] = DEFAULT_MAX_STAGE) -> Node:
    p = Parser(text, backend, max_stage)
    return _finish(p, p.expr())


def parse_series(text: str, backend: Backend = RATIONAL,
                 max_stage: Optional[int] = DEFAULT_MAX_STAGE) -> Series:
    """Parse an expression without ``log``/``exp`` into a series."""
    node = parse_expr(text, backend, max_stage)
    return _eval_ring(node)


def _eval_ring(node: Node) -> Series:
    if node.kind == "const":
        return node.value
    if node.kind == "neg":
        return -_eval_ring(node.args[0])
    if node.kind in ("add", "sub", "mul"):
        a, b = (_eval_ring(x) for x in node.args)
        return a + b if node.kind == "add" else a - b if node.kind == "sub" else a * b
    raise ParseError(f"{node.kind} is not allowed in a plain series", node.start)


def parse_spec(text: str):
    """Parse ``tau{beta=B, S=i,j,k}``."""
    from .chain import AutomorphismSpec

    m = re.fullmatch(r"\s*tau\{\s*beta\s*=\s*(\d+)\s*,\s*S\s*=\s*([\d,\s]*)\}\s*", text)
    if not m:
        raise ParseError("expected tau{beta=B, S=i,j,...}", 0)
    beta = int(m.group(1))
    S = frozenset(int(x) for x in m.group(2).replace(" ", "").split(",") if x)
    return AutomorphismSpec(beta, S)
