"""Hankel determinants of rational power series and the H-continued fraction.

Given ``h = N/D`` the pipeline builds a pair ``(f0, f1)`` with
``x**(m0-1) * rev(f1)/rev(f0) = h``, extracts the quotients of their
generalized Sturm sequence and reads the determinants off the quotient
degrees ``m_i`` and leading coefficients ``b_i``:

    H_{r + m_k} = (-1)**(m_k (m_k - 1)/2) * (b_k * prod_{i<k} b_i**2)**(-m_k) * H_r

with ``H_0 = 1`` and ``H_t = 0`` strictly between consecutive prefix sums of
the ``m_i``.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .coeffring import dense
from .coeffring.fields import Field
from .coeffring.ops import tally
from .coeffring.poly import Poly, RationalFunction
from .errors import InsufficientQuotientsError, NotAPowerSeriesError, PreconditionError
from .euclid import HGCD_THRESHOLD, QuotientSequence, half_gcd_quotients


@dataclass(frozen=True)
class HLevel:
    """One level ``v x**k / (1 + u(x) x - ...)`` of an H-fraction.

    ``u`` is the polynomial in the denominator directly below ``v``.
    """

    v: object
    k: int
    u: Poly


@dataclass(frozen=True)
class HFraction:
    """Super continued fraction with ``delta = 2``:

        v0 x^k0 / (1 + u1 x - v1 x^(k0+k1+2) / (1 + u2 x - v2 x^(k1+k2+2) / ...))
    """

    levels: tuple
    field: Field
    delta: int = 2

    def __post_init__(self):
        for level in self.levels:
            if not level.v:
                raise ValueError("H-fraction coefficients v_j must be nonzero")
            if level.k < 0:
                raise ValueError("H-fraction exponents k_j must be nonnegative")
            if level.u and level.u.degree > level.k + self.delta - 2:
                raise ValueError(f"deg u = {level.u.degree} exceeds k + delta - 2 = {level.k}")

    def __len__(self):
        return len(self.levels)


@dataclass
class HankelReport:
    """Determinants ``H_1..H_n`` (``dets[0]`` is ``H_1``)."""

    dets: list
    nonzero_indices: list = dc_field(default_factory=list)
    kronecker_bound: int | None = None
    quotients: QuotientSequence | None = None
    signature: int | None = None

    @property
    def n(self) -> int:
        return len(self.dets)

    def minors(self) -> list:
        """``[H_0, H_1, ..., H_n]`` with ``H_0 = 1``."""
        one = 1
        if self.quotients is not None and self.quotients.field is not None:
            one = self.quotients.field.one
        return [one] + list(self.dets)


def _require_power_series(h: RationalFunction) -> None:
    if not h.den[0]:
        raise NotAPowerSeriesError()


def construct_f0_f1(h: RationalFunction) -> tuple[Poly, Poly]:
    """Pair ``(f0, f1)`` whose Sturm sequence yields the H-fraction of ``h``.

    With ``nu = deg N - deg D + 1``: ``f0 = rev(D)``, ``f1 = x**(-nu) rev(N)``
    when ``nu < 0``, otherwise ``f0 = x**nu rev(D)``, ``f1 = rev(N)``.
    """
    _require_power_series(h)
    N, D = h.num, h.den
    if not N:
        raise PreconditionError("zero series has no (f0, f1) pair")
    nu = N.degree - D.degree + 1
    if nu < 0:
        return D.reverse(), N.reverse().shift(-nu)
    return D.reverse().shift(nu), N.reverse()


def kronecker_bound(h: RationalFunction) -> int:
    """Index ``d = max(deg N + 1, deg D)`` of the last nonzero determinant."""
    if not h.num:
        return 0
    return max(h.num.degree + 1, h.den.degree)


def _sign_exponent(m: int) -> int:
    return m * (m - 1) // 2


def det_closed_form(quotients: QuotientSequence, r: int):
    """``H_r`` straight from the closed product formula."""
    F = quotients.field
    prefix = quotients.prefix_sums
    if r > quotients.total_degree and not quotients.complete:
        raise InsufficientQuotientsError()
    if r == 0:
        return F.one if F is not None else 1
    if r not in prefix:
        return F.zero
    kappa = prefix.index(r) + 1
    steps = quotients.steps
    parity = sum(_sign_exponent(steps[i].m) for i in range(kappa)) % 2
    denom = F.one
    before = 0
    for i in range(kappa - 1):
        denom = F.reduce(denom * F.pow(steps[i].b, 2 * (r - before) - steps[i].m))
        before += steps[i].m
    denom = F.reduce(denom * F.pow(steps[kappa - 1].b, steps[kappa - 1].m))
    value = F.inv(denom)
    return F.reduce(-value) if parity else value


def dets_from_quotients(quotients: QuotientSequence, n: int) -> list:
    """``[H_1, ..., H_n]`` by the one-step recursion over the quotients."""
    F = quotients.field
    if n > quotients.total_degree and not quotients.complete:
        raise InsufficientQuotientsError(
            f"need more quotient steps: cover {quotients.total_degree} < {n}")
    if F is None:
        raise PreconditionError("empty quotient sequence")
    dets = [F.zero] * n
    H = F.one
    r = 0
    running = F.one  # prod of b_i**2 over completed steps
    for step in quotients.steps:
        if r >= n:
            break
        base = F.reduce(step.b * running)
        factor = F.pow(base, -step.m)
        H = F.reduce(factor * H)
        tally(mul=4)
        if _sign_exponent(step.m) % 2:
            H = F.reduce(-H)
        r += step.m
        if r <= n:
            dets[r - 1] = H
        running = F.reduce(running * step.b * step.b)
    return dets


def comp_hd(h: RationalFunction, n: int, threshold: int = HGCD_THRESHOLD) -> HankelReport:
    """First ``n`` Hankel determinants of the power series of ``h``."""
    if n < 1:
        raise ValueError("n must be positive")
    _require_power_series(h)
    F = h.field
    d = kronecker_bound(h)
    if not h.num:
        return HankelReport([F.zero] * n, [], d)
    f0, f1 = construct_f0_f1(h)
    need = min(n, d)
    quotients = half_gcd_quotients(f0, f1, need=need, threshold=threshold)
    dets = dets_from_quotients(quotients, need) + [F.zero] * (n - need)
    nonzero = [i + 1 for i, v in enumerate(dets) if v]
    return HankelReport(dets, nonzero, d, quotients)


def comp_hd_series(coeffs, n: int, field: Field | None = None,
                   threshold: int = HGCD_THRESHOLD) -> HankelReport:
    """Determinants ``H_1..H_n`` of a series given by its first ``2n - 1`` terms."""
    from .coeffring.fields import QQ

    field = field or QQ
    coeffs = list(coeffs)
    if len(coeffs) < 2 * n - 1:
        raise PreconditionError(
            f"need at least 2n-1 = {2 * n - 1} coefficients, got {len(coeffs)}")
    N = Poly(coeffs[: 2 * n - 1], field)
    report = comp_hd(RationalFunction(N), n, threshold=threshold)
    report.kronecker_bound = None
    return report


def to_h_fraction(quotients: QuotientSequence) -> HFraction:
    """H-fraction read off the quotients: ``k_j = m_j - 1``,
    ``v_0 = 1/b_0``, ``v_j = 1/(b_{j-1} b_j)`` and
    ``1 + u_{j+1} x = rev(B_j)/b_j``."""
    F = quotients.field
    levels = []
    prev_b = None
    for step in quotients.steps:
        inv_b = F.inv(step.b)
        v = inv_b if prev_b is None else F.inv(F.reduce(prev_b * step.b))
        # constant term of rev(B) is b, so rev(B)/b = 1 + x * u
        normalized = dense.scale(dense.reverse(list(step.B.coeffs)), inv_b, F)
        u = Poly._raw(normalized[1:], F)
        levels.append(HLevel(v, step.m - 1, u))
        prev_b = step.b
    return HFraction(tuple(levels), F)


def expand_h_fraction(hf: HFraction, order: int) -> list:
    """First ``order`` coefficients of the (finite) H-fraction, bottom-up."""
    F = hf.field
    if not hf.levels or order <= 0:
        return [F.zero] * max(order, 0)
    levels = hf.levels
    tail = []  # the term subtracted in the current denominator
    for j in range(len(levels) - 1, -1, -1):
        den = dense.add([F.one], dense.shift(list(levels[j].u.coeffs), 1, F), F)
        den = dense.sub(den, tail, F)[:order]
        inv = dense.inv_series(den, order, F)
        if j == 0:
            num_shift = levels[0].k
        else:
            num_shift = levels[j - 1].k + levels[j].k + 2
        if num_shift >= order:
            tail = []
            continue
        tail = dense.scale(dense.shift(inv, num_shift, F), levels[j].v, F)[:order]
        tail = dense.strip(tail)
    return tail + [F.zero] * (order - len(tail))


def dets_from_hfraction(hf: HFraction, n: int) -> list:
    """``[H_1..H_n]``: nonzero only at ``s_j = k_0 + ... + k_{j-1} + j``,
    where ``H_{s_j} = (-1)**eps * prod_{i<j} v_i**(s_j - s_i)``."""
    F = hf.field
    dets = [F.zero] * n
    s = [0]
    for level in hf.levels:
        s.append(s[-1] + level.k + 1)
    eps = 0
    for j in range(1, len(s)):
        eps += hf.levels[j - 1].k * (hf.levels[j - 1].k + 1) // 2
        if s[j] > n:
            break
        value = F.one
        for i in range(j):
            value = F.reduce(value * F.pow(hf.levels[i].v, s[j] - s[i]))
        dets[s[j] - 1] = F.reduce(-value) if eps % 2 else value
    return dets
