"""Coefficient fields.

Field elements are plain Python numbers: :class:`fractions.Fraction` over the
rationals and ``int`` residues in ``[0, p)`` over a prime field.  Dense
polynomial routines use native ``+``, ``-`` and ``*`` on elements and call
:meth:`Field.reduce` on results, which is a no-op over QQ and ``% p`` over
GF(p).  Everything else a routine needs (inversion, signs, conversion) goes
through the field object.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import cached_property

import gmpy2

from ..errors import OrderedFieldRequired, ParseError
from .ops import tally

_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")

#: NTT-friendly word-size prime, 15 * 2**27 + 1.
DEFAULT_MODULUS = 2013265921


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` or ``p`` into a :class:`Fraction`."""
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise ParseError(f"malformed rational {text!r}", text, 0)
    num, den = match.groups()
    if den is not None and int(den) == 0:
        raise ParseError(f"zero denominator in {text!r}", text, text.index("/"))
    return Fraction(int(num), int(den) if den else 1)


class Field:
    """Common interface of a coefficient field."""

    ordered = False
    zero = 0
    one = 1

    def __call__(self, value):
        raise NotImplementedError

    def reduce(self, value):
        return value

    def inv(self, value):
        raise NotImplementedError

    def div(self, a, b):
        return self.reduce(a * self.inv(b))

    def pow(self, value, exponent: int):
        """Binary exponentiation; negative exponents invert first."""
        if exponent < 0:
            value = self.inv(value)
            exponent = -exponent
        result = self.one
        while exponent:
            if exponent & 1:
                result = self.reduce(result * value)
                tally(mul=1)
            exponent >>= 1
            if exponent:
                value = self.reduce(value * value)
                tally(mul=1)
        return result

    def sign(self, value) -> int:
        raise OrderedFieldRequired()

    def to_str(self, value) -> str:
        return str(value)


class RationalField(Field):
    """The rationals QQ with exact :class:`Fraction` elements."""

    ordered = True
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, str):
            return parse_rational(value)
        return Fraction(value)

    def inv(self, value):
        if not value:
            raise ZeroDivisionError("inverse of zero")
        tally(inv=1)
        return 1 / value

    def sign(self, value) -> int:
        return (value > 0) - (value < 0)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeField(Field):
    """GF(p) with ``int`` residues; ``p`` is checked for primality."""

    def __init__(self, modulus: int = DEFAULT_MODULUS):
        modulus = int(modulus)
        if modulus < 2 or not gmpy2.is_prime(modulus):
            raise ValueError(f"modulus {modulus} is not prime")
        self.p = modulus

    def __call__(self, value) -> int:
        if isinstance(value, str):
            value = parse_rational(value)
        if isinstance(value, Fraction):
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    def reduce(self, value):
        return value % self.p

    def inv(self, value):
        if not value % self.p:
            raise ZeroDivisionError("inverse of zero")
        tally(inv=1)
        return pow(value, -1, self.p)

    @cached_property
    def two_adicity(self) -> int:
        """Largest ``k`` with ``2**k | p - 1``."""
        q, k = self.p - 1, 0
        while q % 2 == 0:
            q //= 2
            k += 1
        return k

    @cached_property
    def two_power_root(self) -> int:
        """A primitive ``2**two_adicity``-th root of unity."""
        odd = (self.p - 1) >> self.two_adicity
        g = 2
        while pow(g, (self.p - 1) // 2, self.p) == 1:
            g += 1
        return pow(g, odd, self.p)

    def to_str(self, value) -> str:
        return str(value % self.p)

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = RationalField()


def GF(p: int = DEFAULT_MODULUS) -> PrimeField:
    return PrimeField(p)
