"""Polynomial text grammar and canonical printer.

Grammar (shared by the library and the command line):

* variables are identifiers, ``^`` is power, ``*`` is product (optional
  between adjacent factors), coefficients are integers or rationals written
  ``a/b`` with integer literals on both sides;
* parentheses group subexpressions, ``+``/``-`` act as usual.

``parse_poly(format_poly(p), p.ring) == p`` holds for every WPoly.
"""

import re
from fractions import Fraction

from .wpoly import WeightedRing, WPoly


class ParseError(ValueError):
    def __init__(self, message, line, column):
        super().__init__("%s (line %d, column %d)" % (message, line, column))
        self.line = line
        self.column = column


_TOKEN = re.compile(
    r"\s*(?:(?P<number>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))"
)


class _Lexer:
    def __init__(self, text):
        self.text = text
        self.pos = 0
        self.tokens = []
        self._scan()
        self.i = 0

    def _location(self, pos):
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, col

    def _scan(self):
        pos = 0
        n = len(self.text)
        while pos < n:
            if self.text[pos].isspace():
                pos += 1
                continue
            m = _TOKEN.match(self.text, pos)
            if m is None:
                line, col = self._location(pos)
                raise ParseError("unexpected character %r" % self.text[pos], line, col)
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()

    def peek(self):
        if self.i < len(self.tokens):
            return self.tokens[self.i]
        return (None, None, len(self.text))

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def error(self, message, pos=None):
        if pos is None:
            pos = self.peek()[2]
        line, col = self._location(pos)
        raise ParseError(message, line, col)


def parse_poly(text, ring):
    """Parse polynomial text in the declared ring; exact coefficients."""
    lex = _Lexer(text)
    p = _parse_sum(lex, ring)
    kind, value, pos = lex.peek()
    if kind is not None:
        lex.error("unexpected %r" % value, pos)
    return p


def _sign_run(lex):
    sign = 1
    while True:
        kind, value, _ = lex.peek()
        if kind == "op" and value in "+-":
            lex.next()
            if value == "-":
                sign = -sign
        else:
            return sign


def _parse_sum(lex, ring):
    sign = _sign_run(lex)
    result = _parse_product(lex, ring) * sign
    while True:
        kind, value, _ = lex.peek()
        if kind == "op" and value in "+-":
            sign = _sign_run(lex)
            result = result + _parse_product(lex, ring) * sign
        else:
            return result


def _parse_product(lex, ring):
    result = _parse_power(lex, ring)
    while True:
        kind, value, _ = lex.peek()
        if kind == "op" and value == "*":
            lex.next()
            result = result * _parse_power(lex, ring)
        elif kind in ("name", "number") or (kind == "op" and value == "("):
            # juxtaposition: `2x0(y+1)` multiplies
            result = result * _parse_power(lex, ring)
        else:
            return result


def _parse_power(lex, ring):
    base = _parse_atom(lex, ring)
    kind, value, _ = lex.peek()
    if kind == "op" and value == "^":
        lex.next()
        kind, value, pos = lex.next()
        if kind != "number":
            lex.error("malformed exponent: expected an integer", pos)
        return base ** int(value)
    return base


def _parse_atom(lex, ring):
    kind, value, pos = lex.next()
    if kind == "number":
        num = int(value)
        kind2, value2, _ = lex.peek()
        if kind2 == "op" and value2 == "/":
            lex.next()
            kind3, value3, pos3 = lex.next()
            if kind3 != "number":
                lex.error("division is only allowed between integer literals", pos3)
            if int(value3) == 0:
                lex.error("zero denominator", pos3)
            return ring.constant(Fraction(num, int(value3)))
        return ring.constant(num)
    if kind == "name":
        if value not in ring.variables:
            lex.error("unknown variable %r" % value, pos)
        return ring.variable(value)
    if kind == "op" and value == "(":
        inner = _parse_sum(lex, ring)
        kind2, value2, pos2 = lex.next()
        if kind2 != "op" or value2 != ")":
            lex.error("expected ')'", pos2)
        return inner
    if kind == "op" and value == "/":
        lex.error("division is only allowed between integer literals", pos)
    if kind is None:
        lex.error("unexpected end of input", pos)
    lex.error("unexpected %r" % value, pos)


def _format_coeff(c):
    if c.denominator == 1:
        return str(c.numerator)
    return "%d/%d" % (c.numerator, c.denominator)


def format_poly(p):
    """Canonical text: graded-lex descending, explicit `*` and `^`."""
    if p.is_zero():
        return "0"
    pieces = []
    for e, c in p.sorted_terms():
        factors = []
        for name, k in zip(p.ring.variables, e):
            if k == 1:
                factors.append(name)
            elif k > 1:
                factors.append("%s^%d" % (name, k))
        if not factors:
            body = _format_coeff(abs(c))
        elif abs(c) == 1:
            body = "*".join(factors)
        else:
            body = "*".join([_format_coeff(abs(c))] + factors)
        pieces.append(("-" if c < 0 else "+", body))
    sign, body = pieces[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        out += " %s %s" % (sign, body)
    return out


_RING_ITEM = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_]*)\s*:\s*(\d+)\s*$")


def parse_ring(decl):
    """Parse a ring declaration like ``x0:1, x1:1, y:2``."""
    decl = decl.strip()
    if decl.lower().startswith("ring:"):
        decl = decl[5:]
    names = []
    weights = []
    for item in decl.split(","):
        m = _RING_ITEM.match(item)
        if m is None:
            raise ValueError("bad ring item %r (expected name:weight)" % item.strip())
        names.append(m.group(1))
        weights.append(int(m.group(2)))
    if not names:
        raise ValueError("empty ring declaration")
    return WeightedRing(names, weights)


def format_ring(ring):
    return ", ".join("%s:%d" % vw for vw in zip(ring.variables, ring.weights))
