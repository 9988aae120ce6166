"""Slow reference computations used to cross-check the fast paths.

Nothing here calls into the Euclidean or Hankel machinery: polynomials are
plain ascending lists of :class:`~fractions.Fraction` handled by the small
private helpers below, so a bug in the main pipeline cannot leak into its
oracle.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .coeffring.fields import QQ, Field
from .errors import PreconditionError

#: Largest order the oracles accept from the command line.
MAX_ORACLE_ORDER = 64


@dataclass(frozen=True)
class DenseMatrix:
    n: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.n or any(len(row) != self.n for row in self.entries):
            raise ValueError("matrix must be square")

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def is_symmetric(self) -> bool:
        return all(self.entries[i][j] == self.entries[j][i]
                   for i in range(self.n) for j in range(i))

    @classmethod
    def from_rows(cls, rows) -> "DenseMatrix":
        rows = tuple(tuple(row) for row in rows)
        return cls(len(rows), rows)


def hankel_matrix(coeffs, n: int) -> DenseMatrix:
    coeffs = list(coeffs)
    if len(coeffs) < 2 * n - 1:
        raise PreconditionError(f"need at least {2 * n - 1} coefficients for order {n}")
    return DenseMatrix(n, tuple(tuple(coeffs[i + j] for j in range(n)) for i in range(n)))


def bareiss_det(m: DenseMatrix, field: Field = QQ):
    """Fraction-free elimination; a row swap flips the sign."""
    n = m.n
    if n == 0:
        return field.one
    a = [[field(x) for x in row] for row in m.entries]
    sign = 1
    prev = field.one
    for k in range(n - 1):
        if not a[k][k]:
            pivot = next((i for i in range(k + 1, n) if a[i][k]), None)
            if pivot is None:
                return field.zero
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        inv_prev = field.inv(prev)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = field.reduce((a[i][j] * a[k][k] - a[i][k] * a[k][j]) * inv_prev)
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return field.reduce(det if sign > 0 else -det)


def naive_hankel_dets(coeffs, n: int, field: Field = QQ) -> list:
    """``[H_1, ..., H_n]`` by one Bareiss determinant per order."""
    coeffs = list(coeffs)
    if len(coeffs) < 2 * n - 1:
        raise PreconditionError(f"need at least 2n-1 = {2 * n - 1} coefficients, got {len(coeffs)}")
    return [bareiss_det(hankel_matrix(coeffs, r), field) for r in range(1, n + 1)]


# -- minimal rational polynomial helpers (ascending lists) --------------------

def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _rem(a, b):
    a = [Fraction(c) for c in a]
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        c = a[-1] / b[-1]
        shift = len(a) - 1 - db
        for j in range(db + 1):
            a[shift + j] -= c * b[j]
        a = _trim(a)
    return a


def _quo(a, b):
    a = [Fraction(c) for c in a]
    db = len(b) - 1
    q = [Fraction(0)] * max(len(a) - db, 0)
    while a and len(a) - 1 >= db:
        c = a[-1] / b[-1]
        shift = len(a) - 1 - db
        q[shift] = c
        for j in range(db + 1):
            a[shift + j] -= c * b[j]
        a = _trim(a)
    return _trim(q)


def _deriv(a):
    return _trim([i * c for i, c in enumerate(a)][1:])


def _gcd(a, b):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _rem(a, b)
    return a


def _at(a, x):
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _sturm_distinct_roots(f, lo, hi):
    """Distinct real roots of ``f`` in ``(lo, hi]`` by Sturm's theorem."""
    chain = [f, _deriv(f)]
    while chain[-1]:
        chain.append([-c for c in _rem(chain[-2], chain[-1])])
    chain.pop()

    def variations(x):
        signs = [v for v in (_at(p, x) for p in chain) if v != 0]
        return sum(1 for s, t in zip(signs, signs[1:]) if (s > 0) != (t > 0))

    return variations(lo) - variations(hi)


def _cauchy_bound(f):
    return 1 + max(abs(Fraction(c) / f[-1]) for c in f[:-1]) if len(f) > 1 else Fraction(1)


def charpoly(m: DenseMatrix) -> list:
    """Characteristic polynomial ``det(t I - A)`` by Faddeev-LeVerrier."""
    n = m.n
    A = [[Fraction(x) for x in row] for row in m.entries]
    c = [Fraction(0)] * (n + 1)
    c[n] = Fraction(1)
    M = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M <- A M + c_{n-k+1} I
        AM = [[sum(A[i][l] * M[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            AM[i][i] += c[n - k + 1]
        M = AM
        trace = sum(sum(A[i][l] * M[l][i] for l in range(n)) for i in range(n))
        c[n - k] = -trace / k
    return c


def eigen_sign_count(m: DenseMatrix) -> tuple[int, int]:
    """``(n_pos, n_neg)``: eigenvalue signs of a symmetric rational matrix,
    counted with multiplicity."""
    if not m.is_symmetric():
        raise PreconditionError("eigen_sign_count requires a symmetric matrix")
    p = charpoly(m)
    while p and p[0] == 0:
        p = p[1:]
    if len(p) <= 1:
        return 0, 0
    bound = _cauchy_bound(p)
    n_pos = n_neg = 0
    g = p
    # roots of g_j = gcd(g_{j-1}, g_{j-1}') are the roots of multiplicity >= j
    while len(g) > 1:
        squarefree = _quo(g, _gcd(g, _deriv(g)))
        n_pos += _sturm_distinct_roots(squarefree, Fraction(0), bound)
        n_neg += _sturm_distinct_roots(squarefree, -bound, Fraction(0))
        g = _gcd(g, _deriv(g))
    return n_pos, n_neg


def newton_power_sums(f, count: int) -> list:
    """Power sums ``p_0..p_{count-1}`` of the roots via Newton's identities.

    ``f`` is a coefficient list (ascending) or anything with ``.coeffs``.
    """
    coeffs = [Fraction(c) for c in getattr(f, "coeffs", f)]
    coeffs = _trim(coeffs)
    n = len(coeffs) - 1
    if n < 1:
        raise PreconditionError("power sums need a polynomial of degree >= 1")
    a = [c / coeffs[-1] for c in coeffs]
    p = [Fraction(n)]
    for k in range(1, count):
        acc = Fraction(0)
        for i in range(1, min(k - 1, n) + 1):
            acc += a[n - i] * p[k - i]
        if k <= n:
            acc += k * a[n - k]
        p.append(-acc)
    return p[:count]
