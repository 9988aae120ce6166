"""Generalized Sturm sequences and fast quotient extraction by half-GCD.

The generalized Sturm sequence of ``(f0, f1)`` with ``deg f0 > deg f1`` is

    f_i = B_i * f_{i+1} - f_{i+2},

i.e. ``f_{i+2}`` is the negated remainder of ``f_i`` by ``f_{i+1}``.  The
half-GCD recursion works with the ordinary Euclidean remainder sequence
``r_{i+2} = r_i - q_i r_{i+1}``.  Writing ``f_i = s_i r_i`` gives
``s_0 = s_1 = 1`` and ``s_{i+2} = -s_i``, so ``B_i = s_i s_{i+1} q_i =
(-1)**i q_i``; the sign is applied once, when quotients are extracted.
"""
from __future__ import annotations

from dataclasses import dataclass

from .coeffring import dense
from .coeffring.poly import Poly
from .errors import PreconditionError

#: Degree below which the half-GCD recursion falls back to classical steps.
HGCD_THRESHOLD = 50


@dataclass(frozen=True)
class QuotientStep:
    """One quotient ``B_i`` of the chain with its leading coefficient and degree."""

    B: Poly
    b: object
    m: int


@dataclass(frozen=True)
class QuotientSequence:
    """Quotients ``B_0, B_1, ...`` of a generalized Sturm sequence.

    ``complete`` is true when the chain is known to end right after the last
    step (the next member is zero).  A truncated sequence only determines the
    chain up to ``total_degree``.
    """

    steps: tuple
    deg_f0: int
    deg_f1: int
    complete: bool = True

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __getitem__(self, i):
        return self.steps[i]

    @property
    def total_degree(self) -> int:
        return sum(step.m for step in self.steps)

    @property
    def prefix_sums(self) -> list[int]:
        out, acc = [], 0
        for step in self.steps:
            acc += step.m
            out.append(acc)
        return out

    @property
    def field(self):
        return self.steps[0].B.field if self.steps else None


def _check_pair(f0: Poly, f1: Poly) -> None:
    if f0.field != f1.field:
        raise TypeError("f0 and f1 over different fields")
    if not f0 or not f1:
        raise PreconditionError("f0 and f1 must be nonzero")
    if f0.degree <= f1.degree:
        raise PreconditionError(f"need deg f0 > deg f1, got {f0.degree} and {f1.degree}")


def _steps_from_standard(quotients: list, F) -> tuple:
    steps = []
    for i, q in enumerate(quotients):
        B = q if i % 2 == 0 else dense.neg(q, F)
        steps.append(QuotientStep(Poly._raw(B, F), B[-1], len(B) - 1))
    return tuple(steps)


def sturm_chain_classical(f0: Poly, f1: Poly) -> tuple[list[Poly], QuotientSequence]:
    """Generalized Sturm sequence by repeated long division.

    Returns the chain ``[f_0, ..., f_s, 0]`` and its quotient sequence.

    >>> chain, q = sturm_chain_classical(Poly.parse("x^2-1"), Poly.parse("2*x"))
    >>> [str(f) for f in chain]
    ['x^2-1', '2*x', '1', '0']
    >>> [str(s.B) for s in q]
    ['1/2*x', '2*x']
    """
    _check_pair(f0, f1)
    F = f0.field
    chain = [f0, f1]
    steps = []
    a, b = list(f0.coeffs), list(f1.coeffs)
    while b:
        q, r = dense.divrem(a, b, F)
        r = dense.neg(r, F)
        steps.append(QuotientStep(Poly._raw(q, F), q[-1], len(q) - 1))
        chain.append(Poly._raw(r, F))
        a, b = b, r
    return chain, QuotientSequence(tuple(steps), f0.degree, f1.degree, True)


# 2x2 polynomial matrices are tuples (m00, m01, m10, m11) of coefficient lists.

def _identity(F):
    return ([F.one], [], [], [F.one])


def _apply(M, a, b, F):
    m00, m01, m10, m11 = M
    mul, add = dense.mul, dense.add
    return (add(mul(m00, a, F), mul(m01, b, F), F),
            add(mul(m10, a, F), mul(m11, b, F), F))


def _matmul(S, R, F):
    s00, s01, s10, s11 = S
    r00, r01, r10, r11 = R
    mul, add = dense.mul, dense.add
    return (add(mul(s00, r00, F), mul(s01, r10, F), F),
            add(mul(s00, r01, F), mul(s01, r11, F), F),
            add(mul(s10, r00, F), mul(s11, r10, F), F),
            add(mul(s10, r01, F), mul(s11, r11, F), F))


def _step(M, q, F):
    # left-multiply by [[0, 1], [1, -q]]
    m00, m01, m10, m11 = M
    return (m10, m11,
            dense.sub(m00, dense.mul(q, m10, F), F),
            dense.sub(m01, dense.mul(q, m11, F), F))


def _classical_until(a, b, stop, F):
    quotients = []
    M = _identity(F)
    while b and len(b) - 1 >= stop:
        q, r = dense.divrem(a, b, F)
        quotients.append(q)
        M = _step(M, q, F)
        a, b = b, r
    return quotients, M, a, b


def _hgcd(a, b, F, threshold):
    """Euclidean steps on ``(a, b)`` until the second entry drops below
    ``ceil(deg a / 2)``; returns the quotients and the transition matrix."""
    n = len(a) - 1
    m = (n + 1) // 2
    if len(b) - 1 < m:
        return [], _identity(F)
    if n < threshold:
        return _classical_until(a, b, m, F)[:2]
    qs, R = _hgcd(a[m:], b[m:], F, threshold)
    c, d = _apply(R, a, b, F)
    if len(d) - 1 < m:
        return qs, R
    q, e = dense.divrem(c, d, F)
    qs.append(q)
    R = _step(R, q, F)
    if len(e) - 1 < m:
        return qs, R
    k = 2 * m - (len(d) - 1)
    qs2, S = _hgcd(d[k:], e[k:], F, threshold)
    return qs + qs2, _matmul(S, R, F)


def _quotients_until(a, b, stop, F, threshold):
    """All standard quotients while ``deg b >= stop``; returns them with the
    final pair."""
    quotients = []
    while b and len(b) - 1 >= stop:
        n = len(a) - 1
        if n < threshold:
            qs, _, a, b = _classical_until(a, b, stop, F)
            quotients += qs
            break
        if 2 * stop >= n:
            # truncating to the top coefficients reaches the stop in one call
            k = 2 * stop - n
            qs, M = _hgcd(a[k:], b[k:], F, threshold)
        else:
            qs, M = _hgcd(a, b, F, threshold)
        if qs:
            a, b = _apply(M, a, b, F)
            quotients += qs
        if b and len(b) - 1 >= stop and 2 * stop < n:
            q, r = dense.divrem(a, b, F)
            quotients.append(q)
            a, b = b, r
    return quotients, a, b


def half_gcd_quotients(f0: Poly, f1: Poly, need: int | None = None,
                       threshold: int = HGCD_THRESHOLD) -> QuotientSequence:
    """Quotients of the generalized Sturm sequence of ``(f0, f1)`` by half-GCD.

    With ``need`` given, only the quotients ``B_i`` with prefix degree sum
    ``m_0 + ... + m_{i-1} < need`` are produced, so the result covers total
    degree at least ``min(need, deg f0 - deg gcd)``.  The output equals what
    :func:`sturm_chain_classical` yields on the same prefix.
    """
    _check_pair(f0, f1)
    F = f0.field
    a, b = list(f0.coeffs), list(f1.coeffs)
    stop = 0 if need is None else max(0, f0.degree - need + 1)
    quotients, a, b = _quotients_until(a, b, stop, F, threshold)
    complete = not b
    if b:
        # one more quotient, from leading coefficients only
        quotients.append(dense.quo_top(a, b, F))
        complete = len(b) == 1
    steps = _steps_from_standard(quotients, F)
    return QuotientSequence(steps, f0.degree, f1.degree, complete)
