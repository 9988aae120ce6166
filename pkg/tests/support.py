"""Shared constants and generators for the test modules."""
import random
from fractions import Fraction

from hankeldet import GF, QQ, Poly, RationalFunction

WORKED_NUM = "x^2*(15*x^10+x^5+6*x+4)"
WORKED_DEN = "x^2+3*x+1"
# H_1..H_7 printed in the worked example; confirmed by sympy and Bareiss
WORKED_DETS = [0, 0, -64, -720, -2096, 960, 14060]
WORKED_B = [
    "1/4*x^3+3/8*x^2-5/16*x+15/32",
    "64/45*x+4064/2025",
    "91125/33536*x-2492775/4393216",
    "-143877824/61509375*x-254394664/184528125",
]
CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012, 742900, 2674440]



def random_poly(rng, degree, field=QQ, bound=9, monic=False):
    """Random polynomial of exact ``degree``."""
    if field == QQ:
        coeffs = [rng.randint(-bound, bound) for _ in range(degree)]
        lead = 1 if monic else rng.choice([c for c in range(-bound, bound + 1) if c])
    else:
        coeffs = [rng.randrange(field.p) for _ in range(degree)]
        lead = 1 if monic else rng.randrange(1, field.p)
    return Poly(coeffs + [lead], field)


def random_power_series(rng, max_deg=12, bound=9):
    """Reduced ``N/D`` with ``D(0) != 0``; N may vanish."""
    while True:
        num = Poly([rng.randint(-bound, bound) for _ in range(rng.randint(0, max_deg) + 1)])
        den_coeffs = [rng.randint(-bound, bound) for _ in range(rng.randint(0, max_deg) + 1)]
        if den_coeffs[0] == 0:
            den_coeffs[0] = rng.choice([-2, -1, 1, 3])
        den = Poly(den_coeffs)
        if den:
            return RationalFunction(num, den)


def frac_list(values):
    return [Fraction(v) for v in values]
