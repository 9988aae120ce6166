"""Dense univariate polynomial arithmetic on coefficient lists.

A polynomial is a list ``[c0, c1, ..., cn]`` of field elements with
``cn != 0``; the empty list is zero.  Routines take the field as their last
argument and never mutate their inputs.
"""
from __future__ import annotations

from .fields import PrimeField
from .ntt import mul_ntt, ntt_capable
from .ops import tally

#: Operand length at or below which multiplication is schoolbook.
MUL_THRESHOLD = 32
#: Quotient length above which division goes through Newton inversion.
DIV_THRESHOLD = 64
#: Smaller operand length from which the NTT path is taken when available.
NTT_THRESHOLD = 48


def strip(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def degree(a: list) -> int:
    """Degree with ``-1`` standing in for the zero polynomial."""
    return len(a) - 1


def _finish(res: list, F) -> list:
    if isinstance(F, PrimeField):
        p = F.p
        res = [c % p for c in res]
    return strip(res)


def add(a: list, b: list, F) -> list:
    if len(a) < len(b):
        a, b = b, a
    res = list(a)
    for i, c in enumerate(b):
        res[i] = res[i] + c
    return _finish(res, F)


def sub(a: list, b: list, F) -> list:
    n = max(len(a), len(b))
    res = list(a) + [F.zero] * (n - len(a))
    for i, c in enumerate(b):
        res[i] = res[i] - c
    return _finish(res, F)


def neg(a: list, F) -> list:
    return _finish([-c for c in a], F)


def scale(a: list, c, F) -> list:
    if not c:
        return []
    tally(mul=len(a))
    return _finish([c * x for x in a], F)


def shift(a: list, k: int, F) -> list:
    """Multiply by ``x**k``; negative ``k`` drops the low coefficients."""
    if not a:
        return []
    if k >= 0:
        return [F.zero] * k + list(a)
    return list(a[-k:])


def _school(a: list, b: list) -> list:
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] += ai * bj
    tally(mul=len(a) * len(b))
    return res


def _karatsuba(a: list, b: list) -> list:
    # len(a) == len(b); result left unreduced
    n = len(a)
    if n <= MUL_THRESHOLD:
        return _school(a, b)
    h = n // 2
    a0, a1 = a[:h], a[h:]
    b0, b1 = b[:h], b[h:]
    z0 = _karatsuba(a0, b0)
    z2 = _karatsuba(a1, b1)
    sa = list(a1)
    sb = list(b1)
    for i in range(h):
        sa[i] += a0[i]
        sb[i] += b0[i]
    z1 = _karatsuba(sa, sb)
    res = [0] * (2 * n - 1)
    for i, c in enumerate(z0):
        res[i] += c
        z1[i] -= c
    for i, c in enumerate(z2):
        res[i + 2 * h] += c
        z1[i] -= c
    for i, c in enumerate(z1):
        res[i + h] += c
    return res


def mul(a: list, b: list, F) -> list:
    """Product, dispatching on operand size and field."""
    if not a or not b:
        return []
    if len(a) > len(b):
        a, b = b, a
    la, lb = len(a), len(b)
    if la <= MUL_THRESHOLD:
        return _finish(_school(a, b), F)
    if la >= NTT_THRESHOLD and ntt_capable(F, la + lb - 1):
        return strip(mul_ntt(a, b, F))
    # unbalanced operands: Karatsuba on blocks of the shorter length
    res = [0] * (la + lb - 1)
    for start in range(0, lb, la):
        block = b[start:start + la]
        block = block + [0] * (la - len(block))
        for i, c in enumerate(_karatsuba(a, block)):
            if start + i < len(res):
                res[start + i] += c
    return _finish(res, F)


def mul_schoolbook(a: list, b: list, F) -> list:
    """Reference quadratic product, used to check the fast paths."""
    if not a or not b:
        return []
    return _finish(_school(a, b), F)


def inv_series(f: list, k: int, F) -> list:
    """``g`` with ``f * g = 1 mod x**k``; requires ``f[0] != 0``."""
    if not f or not f[0]:
        raise ZeroDivisionError("series inverse needs a nonzero constant term")
    if k <= 0:
        return []
    if k <= DIV_THRESHOLD:
        inv0 = F.inv(f[0])
        g = [inv0]
        for i in range(1, k):
            acc = 0
            for j in range(1, min(i, len(f) - 1) + 1):
                acc += f[j] * g[i - j]
            tally(mul=min(i, len(f) - 1) + 1)
            g.append(F.reduce(-acc * inv0))
        return strip(g)
    g = [F.inv(f[0])]
    prec = 1
    while prec < k:
        prec = min(2 * prec, k)
        e = mul(f[:prec], g, F)[:prec]
        e = e + [F.zero] * (prec - len(e))
        e[0] = F.reduce(e[0] - 1)
        corr = mul(g, strip(e), F)[:prec]
        g = sub(g, corr, F)[:prec]
    return strip(g)


def divrem(a: list, b: list, F) -> tuple[list, list]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], list(a)
    m = len(a) - len(b)
    if m + 1 > DIV_THRESHOLD and len(b) > MUL_THRESHOLD:
        return _divrem_newton(a, b, F)
    return _divrem_classical(a, b, F)


def _divrem_classical(a: list, b: list, F) -> tuple[list, list]:
    db = len(b) - 1
    m = len(a) - len(b)
    inv_lc = F.inv(b[-1])
    r = list(a)
    q = [F.zero] * (m + 1)
    for i in range(m, -1, -1):
        c = F.reduce(F.reduce(r[i + db]) * inv_lc)
        q[i] = c
        if c:
            for j in range(db):
                r[i + j] = r[i + j] - c * b[j]
    tally(mul=(m + 1) * (db + 1))
    return strip(q), _finish(r[:db], F)


def _divrem_newton(a: list, b: list, F) -> tuple[list, list]:
    m = len(a) - len(b)
    ra = a[::-1][: m + 1]
    rb = b[::-1][: m + 1]
    rq = mul(ra, inv_series(rb, m + 1, F), F)[: m + 1]
    rq = rq + [F.zero] * (m + 1 - len(rq))
    q = strip(rq[::-1])
    low = len(b) - 1
    r = sub(a[:low], mul(q, b, F)[:low], F)
    return q, r


def quo_top(a: list, b: list, F) -> list:
    """Quotient of ``a`` by ``b`` read off their leading coefficients only."""
    t = max(0, 2 * degree(b) - degree(a))
    if t:
        a, b = a[t:], b[t:]
    return divrem(a, b, F)[0]


def derivative(a: list, F) -> list:
    return _finish([i * c for i, c in enumerate(a)][1:], F)


def evaluate(a: list, x, F):
    acc = F.zero
    for c in reversed(a):
        acc = F.reduce(acc * x + c)
    tally(mul=len(a))
    return acc


def monic(a: list, F) -> list:
    if not a:
        return []
    return scale(a, F.inv(a[-1]), F)


def gcd(a: list, b: list, F) -> list:
    """Monic gcd by the classical Euclidean algorithm."""
    while b:
        a, b = b, divrem(a, b, F)[1]
    return monic(a, F)


def reverse(a: list) -> list:
    """``x**deg(a) * a(1/x)``; low zero coefficients disappear."""
    return strip(list(reversed(a)))
