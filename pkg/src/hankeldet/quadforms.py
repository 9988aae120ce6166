"""Hankel signatures and real-root counting over the rationals.

Three routes to the signature of a nonsingular Hankel matrix ``H_n(h)`` are
available and cross-checked:

* the Frobenius rule on the leading principal minors ``H_0..H_n``;
* the quotient sum ``sum(sign(b_i) for m_i odd)`` over the steps whose prefix
  degree sums reach ``n``;
* ``V(-inf) - V(+inf)`` on the leading terms of the generalized Sturm chain.

Index convention: the sum runs over ``b_i`` of the step that *produces* the
gap ``m_i``, i.e. ``sign(H_{r+m_i}/H_r)`` is governed by ``b_i``.  With
``m_i`` odd the Frobenius term is
``(-1)**((m-1)/2 + m(m-1)/2) sign(b_i)**m = sign(b_i)``, and the randomized
checks against the eigenvalue oracle agree with this reading.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .coeffring.poly import Poly, RationalFunction
from .errors import (
    EndpointRootError,
    NotSquarefreeError,
    OracleMismatchError,
    OrderedFieldRequired,
    PreconditionError,
    SingularHankelError,
)
from .euclid import HGCD_THRESHOLD, sturm_chain_classical
from .hankelcf import comp_hd

PLUS_INF = math.inf
MINUS_INF = -math.inf


@dataclass(frozen=True)
class SignVariationCount:
    at: object
    count: int


@dataclass(frozen=True)
class SignatureResult:
    signature: int
    n: int
    method: str
    agreement: dict | None = None


def _require_ordered(field) -> None:
    if not field.ordered:
        raise OrderedFieldRequired()


def _sign_at(f: Poly, at) -> int:
    F = f.field
    if not f:
        return 0
    if at == PLUS_INF:
        return F.sign(f.lc)
    if at == MINUS_INF:
        s = F.sign(f.lc)
        return -s if f.degree % 2 else s
    return F.sign(f(at))


def _count_changes(signs) -> int:
    signs = [s for s in signs if s]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def sign_variations(chain, at) -> SignVariationCount:
    """Sign changes, zeros dropped, along ``chain`` evaluated at ``at``.

    ``at`` is a rational or ``math.inf`` / ``-math.inf``; the infinite points
    are handled symbolically from leading coefficients and degrees.
    """
    chain = list(chain)
    for f in chain:
        _require_ordered(f.field)
    if at not in (PLUS_INF, MINUS_INF):
        at = Fraction(at)
    return SignVariationCount(at, _count_changes(_sign_at(f, at) for f in chain))


def _squarefree_chain(f: Poly):
    _require_ordered(f.field)
    if f.degree < 1:
        raise PreconditionError("need a polynomial of degree >= 1")
    chain, _ = sturm_chain_classical(f, f.derivative())
    last = chain[-2]
    if last.degree > 0:
        raise NotSquarefreeError(last.monic())
    return chain[:-1]


def count_real_roots_sturm(f: Poly, a, b) -> int:
    """Real roots of squarefree ``f`` in the half-open interval ``(a, b]``."""
    a, b = Fraction(a), Fraction(b)
    if not a < b:
        raise PreconditionError("need a < b")
    chain = _squarefree_chain(f)
    for end in (a, b):
        if not f(end):
            raise EndpointRootError(f"endpoint {end} is a root")
    return sign_variations(chain, a).count - sign_variations(chain, b).count


def power_sum_series(f: Poly) -> RationalFunction:
    """``rev(f')/rev(f)`` for monic ``f``: its series is ``sum p_k x^k`` with
    ``p_k`` the k-th power sum of the roots of ``f``."""
    if f.degree < 1:
        raise PreconditionError("power sums need a polynomial of degree >= 1")
    f = f.monic()
    return RationalFunction(f.derivative().reverse(), f.reverse())


def frobenius_signature(minors) -> SignatureResult:
    """Signature of a nonsingular Hankel matrix from ``[H_0=1, H_1, ..., H_n]``.

    A gap ``g`` between consecutive nonzero minors contributes
    ``(-1)**((g-1)/2) * sign(H_next/H_prev)`` when ``g`` is odd and 0 otherwise.
    """
    minors = [Fraction(x) for x in minors]
    n = len(minors) - 1
    if not minors[n]:
        raise SingularHankelError("singular; Frobenius rule requires nonsingular")
    nonzero = [i for i, v in enumerate(minors) if v]
    total = 0
    for prev, cur in zip(nonzero, nonzero[1:]):
        gap = cur - prev
        if gap % 2:
            ratio_sign = 1 if (minors[cur] > 0) == (minors[prev] > 0) else -1
            total += ratio_sign * (-1 if (gap - 1) // 2 % 2 else 1)
    return SignatureResult(total, n, "frobenius")


def _leading_term_variations(quotients, n_steps):
    # leading terms a_i x^deg(f_i) of f_0..f_{t+1}: a_{i+1} = a_i / b_i
    signs_lc = [1]
    degrees = [quotients.deg_f0]
    for step in quotients.steps[:n_steps]:
        signs_lc.append(signs_lc[-1] * (1 if step.b > 0 else -1))
        degrees.append(degrees[-1] - step.m)
    at_plus = _count_changes(signs_lc)
    at_minus = _count_changes(s if d % 2 == 0 else -s for s, d in zip(signs_lc, degrees))
    return at_minus, at_plus


def signature_via_sturm(h: RationalFunction, n: int,
                        threshold: int = HGCD_THRESHOLD) -> SignatureResult:
    """Signature of ``H_n(h)`` from the signs of the quotients' leading
    coefficients, verified against the Frobenius rule on the same minors."""
    _require_ordered(h.field)
    report = comp_hd(h, n, threshold=threshold)
    if not report.dets[n - 1]:
        raise SingularHankelError(f"singular Hankel matrix: H_{n} = 0")
    quotients = report.quotients
    prefix = quotients.prefix_sums
    t = prefix.index(n)
    steps = quotients.steps[: t + 1]
    by_quotients = sum((1 if s.b > 0 else -1) for s in steps if s.m % 2)
    v_minus, v_plus = _leading_term_variations(quotients, t + 1)
    frob = frobenius_signature(report.minors()).signature
    if not by_quotients == v_minus - v_plus == frob:
        raise OracleMismatchError(
            f"signature routes disagree: quotients {by_quotients}, "
            f"V(-inf)-V(+inf) {v_minus - v_plus}, Frobenius {frob}")
    agreement = {"frobenius": frob, "sturm-variation": v_minus - v_plus}
    return SignatureResult(by_quotients, n, "sturm-variation", agreement)


def count_real_roots_hankel(f: Poly, threshold: int = HGCD_THRESHOLD) -> int:
    """Number of real roots of squarefree ``f`` as the signature of the
    power-sum Hankel matrix of order ``deg f``."""
    _squarefree_chain(f)
    return signature_via_sturm(power_sum_series(f), f.degree, threshold=threshold).signature


def cauchy_bound(f: Poly) -> Fraction:
    """``1 + max |a_i / a_n|``; every root lies strictly inside."""
    if f.degree < 1:
        return Fraction(1)
    lc = f.lc
    return 1 + max(abs(Fraction(c) / lc) for c in f.coeffs[:-1])


__all__ = [
    "SignVariationCount", "SignatureResult", "sign_variations", "count_real_roots_sturm",
    "power_sum_series", "frobenius_signature", "signature_via_sturm",
    "count_real_roots_hankel", "cauchy_bound", "PLUS_INF", "MINUS_INF",
]
