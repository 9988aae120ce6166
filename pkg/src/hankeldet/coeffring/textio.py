"""Text forms for rationals and polynomials.

Two input forms are accepted: a comma-separated ascending coefficient list
(``1,3,1`` is ``1+3x+x^2``) and a human expression in ``x`` with ``+ - * / ^``
(or ``**``) and parentheses.  Output is always the human form, highest
degree first.
"""
from __future__ import annotations

import re

from ..errors import ParseError
from .fields import QQ, Field, parse_rational

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|(\*\*|[-+*/^()])|([A-Za-z_]\w*))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", text, bad)
        start = m.start(m.lastindex)
        number, op, name = m.groups()
        if number is not None:
            tokens.append(("num", int(number), start))
        elif op is not None:
            tokens.append(("op", "^" if op == "**" else op, start))
        else:
            if name != "x":
                raise ParseError(f"unknown variable {name!r}", text, start)
            tokens.append(("x", name, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, field: Field):
        from .poly import Poly

        self.Poly = Poly
        self.text = text
        self.field = field
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, self.text, tok[2])

    def parse(self):
        result = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}")
        return result

    def expr(self):
        sign = 1
        if self.peek()[:2] in (("op", "-"), ("op", "+")):
            sign = -1 if self.take()[1] == "-" else 1
        result = self.term()
        if sign < 0:
            result = -result
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self):
        result = self.power()
        while True:
            tok = self.peek()
            if tok[:2] == ("op", "*"):
                self.take()
                result = result * self.power()
            elif tok[:2] == ("op", "/"):
                self.take()
                divisor = self.power()
                if divisor.degree != 0:
                    self.fail("division by a non-constant polynomial", tok)
                result = result * self.field.inv(divisor.coeffs[0])
            elif tok[0] in ("x", "num") or tok[:2] == ("op", "("):
                result = result * self.power()
            else:
                return result

    def power(self):
        base = self.primary()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "num":
                self.fail("exponent must be a nonnegative integer", tok)
            return base ** tok[1]
        return base

    def primary(self):
        tok = self.take()
        kind, value, _ = tok
        if kind == "num":
            return self.Poly([value], self.field)
        if kind == "x":
            return self.Poly.x(self.field)
        if tok[:2] == ("op", "("):
            inner = self.expr()
            if self.take()[:2] != ("op", ")"):
                self.fail("missing ')'", self.tokens[self.i - 1])
            return inner
        if tok[:2] == ("op", "-"):
            return -self.power()
        self.fail("expected a number, 'x' or '('", tok)


def parse_coeff_list(text: str, field: Field = QQ):
    from .poly import Poly

    coeffs = []
    pos = 0
    for part in text.split(","):
        if not part.strip():
            raise ParseError("empty coefficient", text, pos)
        try:
            coeffs.append(field(parse_rational(part)))
        except ParseError:
            raise ParseError(f"malformed coefficient {part.strip()!r}", text, pos) from None
        pos += len(part) + 1
    return Poly(coeffs, field)


def parse_poly(text: str, field: Field = QQ):
    """Parse either text form into a :class:`Poly`."""
    if not text.strip():
        raise ParseError("empty polynomial text", text, 0)
    if "," in text and not re.search(r"[x()^*]", text):
        return parse_coeff_list(text, field)
    try:
        return _Parser(text, field).parse()
    except ZeroDivisionError:
        raise ParseError("division by zero", text, text.find("/")) from None


def format_poly(p) -> str:
    if not p.coeffs:
        return "0"
    F = p.field
    parts = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        cs = F.to_str(c)
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        if not mono:
            term = cs
        elif cs == "1":
            term = mono
        elif cs == "-1":
            term = "-" + mono
        else:
            term = f"{cs}*{mono}"
        if parts and not term.startswith("-"):
            term = "+" + term
        parts.append(term)
    return "".join(parts)


def format_coeffs(p) -> str:
    if not p.coeffs:
        return "0"
    return ",".join(p.field.to_str(c) for c in p.coeffs)
