"""Recursive-descent parser for the polynomial input language.

Grammar::

    expr   := [+|-] term {(+|-) term}
    term   := factor {* factor}
    factor := atom [^ INT]
    atom   := INT [/ INT] | x<k> | t<k> | ( expr )

``x0`` is accepted as an alias: when any ``x0`` appears, even variables are
read 0-based (``x0`` is the first coordinate).
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, Optional, Tuple

from .algebra import SuperPolynomial
from .errors import ParseError

_TOKEN = re.compile(r"\s*(?:(\d+)|([xt])(\d+)|(\S))")


def tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        start = m.start(1) if m.group(1) else m.start(2) if m.group(2) else m.start(4)
        if m.group(1):
            tokens.append(("int", m.group(1), start))
        elif m.group(2):
            tokens.append((m.group(2), m.group(3), start))
        else:
            ch = m.group(4)
            if ch not in "+-*^/()":
                raise ParseError(f"unexpected character {ch!r}", start)
            tokens.append(("op", ch, start))
        pos = m.end()
    if text[pos:].strip():
        raise ParseError("unexpected trailing input", pos)
    tokens.append(("end", "", len(text)))
    return tokens


def uses_zero_index(text: str) -> bool:
    return re.search(r"x0(?!\d)", text) is not None


def infer_counts(text: str, zero_based: Optional[bool] = None) -> Tuple[int, int]:
    """Smallest (n_even, n_odd) accommodating every variable in ``text``."""
    if zero_based is None:
        zero_based = uses_zero_index(text)
    shift = 1 if zero_based else 0
    n_even = max([int(k) + shift for k in re.findall(r"x(\d+)", text)] or [0])
    n_odd = max([int(k) for k in re.findall(r"t(\d+)", text)] or [0])
    return n_even, n_odd


class _Parser:
    def __init__(self, text, n_even, n_odd, zero_based):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0
        self.n_even = n_even
        self.n_odd = n_odd
        self.shift = 1 if zero_based else 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, ch):
        kind, val, pos = self.take()
        if kind != "op" or val != ch:
            raise ParseError(f"expected {ch!r}", pos)

    def const(self, c):
        return SuperPolynomial.constant(c, self.n_even, self.n_odd)

    def parse(self):
        result = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected token {val!r}", pos)
        return result

    def expr(self):
        kind, val, pos = self.peek()
        sign = 1
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                acc = acc + rhs if val == "+" else acc - rhs
            else:
                return acc

    def term(self):
        acc = self.factor()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val == "*":
                self.take()
                acc = acc * self.factor()
            elif kind in ("int", "x", "t") or (kind == "op" and val == "("):
                raise ParseError("juxtaposition is not multiplication; use '*'", pos)
            else:
                return acc

    def factor(self):
        kind, val, pos = self.peek()
        base, is_odd_var = self.atom()
        kind, val, pos = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val, pos = self.take()
            if kind != "int":
                raise ParseError("exponent must be a non-negative integer", pos)
            e = int(val)
            if is_odd_var and e > 1:
                raise ParseError("odd variables square to zero; exponent > 1 not allowed", pos)
            return base ** e
        return base

    def atom(self):
        kind, val, pos = self.take()
        if kind == "int":
            num = int(val)
            nxt = self.peek()
            if nxt[0] == "op" and nxt[1] == "/":
                self.take()
                k2, v2, p2 = self.take()
                if k2 != "int":
                    raise ParseError("rational literal needs an integer denominator", p2)
                if int(v2) == 0:
                    raise ParseError("zero denominator", p2)
                return self.const(Fraction(num, int(v2))), False
            return self.const(num), False
        if kind == "x":
            idx = int(val) - 1 + self.shift
            if not 0 <= idx < self.n_even:
                raise ParseError(f"unknown variable x{val}", pos)
            return SuperPolynomial.even_var(idx, self.n_even, self.n_odd), False
        if kind == "t":
            idx = int(val) - 1
            if not 0 <= idx < self.n_odd:
                raise ParseError(f"unknown variable t{val}", pos)
            return SuperPolynomial.odd_var(idx, self.n_even, self.n_odd), True
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner, False
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected token {val!r}", pos)


def parse_polynomial(
    text: str,
    n_even: Optional[int] = None,
    n_odd: Optional[int] = None,
    zero_based: Optional[bool] = None,
) -> SuperPolynomial:
    """Parse ``text`` into a canonical polynomial.

    Variable counts default to the smallest ones the text needs.
    """
    if zero_based is None:
        zero_based = uses_zero_index(text)
    ne, no = infer_counts(text, zero_based)
    n_even = ne if n_even is None else n_even
    n_odd = no if n_odd is None else n_odd
    return _Parser(text, n_even, n_odd, zero_based).parse()
