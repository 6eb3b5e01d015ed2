"""Parser for polynomial expressions.

Grammar (whitespace ignored, positions are byte offsets into the input):

    expr   := ['-'] term { ('+' | '-') term }
    term   := factor { '*' factor }
    factor := atom [ '^' INT ]
    atom   := RAT | NAME | '(' expr ')'
    RAT    := INT [ '/' INT ]

Numerals are unsigned; minus is only the binary or leading unary operator.
'/' exists solely inside rational literals, matching how coefficients are
printed, so every text() output parses back.  NAME must be a variable of
the ambient ring.
"""

import re
from fractions import Fraction

from .errors import ExponentOverflow, PolySyntaxError, UnknownVariable
from .poly import EXP_CAP

_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<int>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*^()/])"
)


def _tokenize(text):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise PolySyntaxError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            toks.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, ring, toks):
        self.ring = ring
        self.toks = toks
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expr(self):
        kind, val, _ = self.peek()
        negate = kind == "op" and val == "-"
        if negate:
            self.take()
        acc = self.term()
        if negate:
            acc = -acc
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                acc = acc + rhs if val == "+" else acc - rhs
            else:
                return acc

    def term(self):
        acc = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                acc = acc * self.factor()
            else:
                return acc

    def factor(self):
        base = self.atom()
        kind, val, pos = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val, pos = self.take()
            if kind != "int":
                raise PolySyntaxError("exponent must be an unsigned integer", pos)
            k = int(val)
            if k > EXP_CAP:
                raise ExponentOverflow(f"exponent {k} exceeds the cap {EXP_CAP}")
            return base**k
        return base

    def atom(self):
        kind, val, pos = self.take()
        if kind == "int":
            k2, v2, _ = self.peek()
            if k2 == "op" and v2 == "/":
                self.take()
                k3, v3, p3 = self.take()
                if k3 != "int":
                    raise PolySyntaxError("denominator must be an unsigned integer", p3)
                if int(v3) == 0:
                    raise PolySyntaxError("denominator is zero", p3)
                return self.ring.const(Fraction(int(val), int(v3)))
            return self.ring.const(int(val))
        if kind == "name":
            if val not in self.ring.index:
                raise UnknownVariable(f"unknown variable {val!r}", pos)
            return self.ring.var(val)
        if kind == "op" and val == "(":
            inner = self.expr()
            kind, val, pos = self.take()
            if not (kind == "op" and val == ")"):
                raise PolySyntaxError("expected ')'", pos)
            return inner
        raise PolySyntaxError(f"expected integer, variable, or '(', got {val!r}", pos)


def parse_poly(ring, text):
    """Parse `text` into a polynomial of `ring`."""
    p = _Parser(ring, _tokenize(text))
    result = p.expr()
    kind, val, pos = p.peek()
    if kind != "end":
        raise PolySyntaxError(f"trailing input {val!r}", pos)
    return result


def parse_many(ring, texts):
    return [parse_poly(ring, t) for t in texts]
