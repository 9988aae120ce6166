"""Immutable dense polynomials and rational functions over a coefficient field."""
from __future__ import annotations

import math

from ..errors import NotAPowerSeriesError
from . import dense
from .fields import QQ, Field


class Poly:
    """Univariate polynomial with ascending coefficients.

    >>> p = Poly([1, 3, 1])
    >>> str(p)
    'x^2+3*x+1'
    >>> p.degree
    2
    """

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs=(), field: Field = QQ):
        conv = [field(c) for c in coeffs]
        self.coeffs = tuple(dense.strip(conv))
        self.field = field

    @classmethod
    def _raw(cls, coeffs: list, field: Field) -> "Poly":
        # trusted path: coeffs already canonical field elements
        obj = object.__new__(cls)
        obj.coeffs = tuple(coeffs)
        obj.field = field
        return obj

    @classmethod
    def x(cls, field: Field = QQ) -> "Poly":
        return cls._raw([field.zero, field.one], field)

    @classmethod
    def constant(cls, c, field: Field = QQ) -> "Poly":
        return cls([c], field)

    @classmethod
    def parse(cls, text: str, field: Field = QQ) -> "Poly":
        from .textio import parse_poly

        return parse_poly(text, field)

    @property
    def degree(self):
        """Degree; ``-math.inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    @property
    def lc(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def valuation(self) -> int:
        """Index of the lowest nonzero coefficient."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        raise ValueError("zero polynomial has no valuation")

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.field != self.field:
                raise TypeError(f"field mismatch: {self.field} vs {other.field}")
            return other
        return Poly([other], self.field)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self.coeffs == other.coeffs
        try:
            return self == self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.field))

    def __add__(self, other):
        other = self._coerce(other)
        return Poly._raw(dense.add(list(self.coeffs), list(other.coeffs), self.field), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return Poly._raw(dense.sub(list(self.coeffs), list(other.coeffs), self.field), self.field)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return Poly._raw(dense.neg(list(self.coeffs), self.field), self.field)

    def __mul__(self, other):
        other = self._coerce(other)
        return Poly._raw(dense.mul(list(self.coeffs), list(other.coeffs), self.field), self.field)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = Poly.constant(1, self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        q, r = dense.divrem(list(self.coeffs), list(other.coeffs), self.field)
        return Poly._raw(q, self.field), Poly._raw(r, self.field)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        return dense.evaluate(list(self.coeffs), self.field(x), self.field)

    def shift(self, k: int) -> "Poly":
        """Multiply by ``x**k`` (``k < 0`` truncates low terms)."""
        return Poly._raw(dense.strip(dense.shift(list(self.coeffs), k, self.field)), self.field)

    def reverse(self) -> "Poly":
        """``x**deg(f) * f(1/x)``."""
        if not self.coeffs:
            raise ValueError("reverse of the zero polynomial is undefined")
        return Poly._raw(dense.reverse(list(self.coeffs)), self.field)

    def derivative(self) -> "Poly":
        return Poly._raw(dense.derivative(list(self.coeffs), self.field), self.field)

    def monic(self) -> "Poly":
        return Poly._raw(dense.monic(list(self.coeffs), self.field), self.field)

    def gcd(self, other) -> "Poly":
        other = self._coerce(other)
        return Poly._raw(dense.gcd(list(self.coeffs), list(other.coeffs), self.field), self.field)

    def __str__(self):
        from .textio import format_poly

        return format_poly(self)

    def __repr__(self):
        return f"Poly({str(self)!r}, {self.field!r})"


class RationalFunction:
    """Reduced quotient ``N/D`` of polynomials; gcd(N, D) is divided out."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None):
        if den is None:
            den = Poly.constant(1, num.field)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.field != den.field:
            raise TypeError("numerator and denominator over different fields")
        if num:
            g = num.gcd(den)
            if g.degree > 0:
                num, den = num // g, den // g
        else:
            den = Poly.constant(1, num.field)
        self.num = num
        self.den = den

    @classmethod
    def parse(cls, num: str, den: str = "1", field: Field = QQ) -> "RationalFunction":
        return cls(Poly.parse(num, field), Poly.parse(den, field))

    @property
    def field(self) -> Field:
        return self.num.field

    def is_power_series(self) -> bool:
        return bool(self.den[0])

    def series(self, order: int) -> list:
        return series_expand(self, order)

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RationalFunction({self.num!s}, {self.den!s})"


def poly_add(a: Poly, b: Poly) -> Poly:
    return a + b


def poly_sub(a: Poly, b: Poly) -> Poly:
    return a - b


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def poly_divrem(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    return divmod(a, b)


def reverse(f: Poly) -> Poly:
    return f.reverse()


def poly_eval(f: Poly, c):
    return f(c)


def series_expand(h: RationalFunction, order: int) -> list:
    """First ``order`` power-series coefficients of ``N/D``.

    Uses the recurrence ``D[0] h_i = N_i - sum_{j>=1} D[j] h_{i-j}``.
    """
    F = h.field
    D = h.den.coeffs
    N = h.num.coeffs
    if not D[0]:
        raise NotAPowerSeriesError()
    inv0 = F.inv(D[0])
    out = []
    for i in range(order):
        acc = N[i] if i < len(N) else F.zero
        for j in range(1, min(i, len(D) - 1) + 1):
            acc = acc - D[j] * out[i - j]
        out.append(F.reduce(acc * inv0))
    return out
