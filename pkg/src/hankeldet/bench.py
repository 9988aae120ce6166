"""Operation-count benchmark of the determinant pipeline over GF(p).

Each point runs the half-GCD quotient extraction on a random pair of degrees
``n`` and ``n - 1`` followed by the determinant recursion, counting field
multiplications and inversions.  Building the pair from a rational function
is linear and left out.
"""
from __future__ import annotations

import random
import time

from .coeffring.fields import DEFAULT_MODULUS, PrimeField
from .coeffring.ops import count_ops
from .coeffring.poly import Poly
from .euclid import HGCD_THRESHOLD, half_gcd_quotients
from .hankelcf import dets_from_quotients

DEFAULT_SIZES = (1 << 10, 1 << 11, 1 << 12, 1 << 13, 1 << 14)


def random_pair(n: int, field: PrimeField, rng: random.Random) -> tuple[Poly, Poly]:
    """Dense random polynomials of degrees ``n`` and ``n - 1``."""
    p = field.p
    f0 = [rng.randrange(p) for _ in range(n)] + [rng.randrange(1, p)]
    f1 = [rng.randrange(p) for _ in range(n - 1)] + [rng.randrange(1, p)]
    return Poly._raw(f0, field), Poly._raw(f1, field)


def bench_point(n: int, field: PrimeField, seed: int = 0,
                threshold: int = HGCD_THRESHOLD) -> dict:
    rng = random.Random(f"{seed}:{n}")
    f0, f1 = random_pair(n, field, rng)
    start = time.perf_counter()
    with count_ops() as ops:
        quotients = half_gcd_quotients(f0, f1, need=n, threshold=threshold)
        dets_from_quotients(quotients, n)
    wall = (time.perf_counter() - start) * 1000
    return {"n": n, "ops": ops.total, "mul": ops.mul, "inv": ops.inv, "wall_ms": round(wall, 3)}


def run_bench(sizes=DEFAULT_SIZES, modulus: int = DEFAULT_MODULUS, seed: int = 0,
              threshold: int = HGCD_THRESHOLD) -> list[dict]:
    """One row per size; ``ratio`` compares op counts with the previous row."""
    field = PrimeField(modulus)
    rows = []
    for n in sizes:
        row = bench_point(n, field, seed, threshold)
        if rows:
            prev = rows[-1]
            row["ratio"] = round(row["ops"] / prev["ops"], 4)
            row["wall_ratio"] = round(row["wall_ms"] / max(prev["wall_ms"], 1e-9), 4)
        else:
            row["ratio"] = row["wall_ratio"] = None
        rows.append(row)
    return rows
