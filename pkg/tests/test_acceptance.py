"""Acceptance criteria, one test each; every test records a PASS/FAIL line
that is repeated in the pytest terminal summary."""
import random
import time
from fractions import Fraction

import pytest

from support import CATALAN, WORKED_B, WORKED_DETS, random_poly, random_power_series
from hankeldet import (
    GF,
    QQ,
    Poly,
    comp_hd,
    comp_hd_series,
    count_real_roots_hankel,
    count_real_roots_sturm,
    dets_from_hfraction,
    dets_from_quotients,
    expand_h_fraction,
    frobenius_signature,
    half_gcd_quotients,
    power_sum_series,
    series_expand,
    signature_via_sturm,
    sturm_chain_classical,
    to_h_fraction,
)
from hankeldet.bench import DEFAULT_SIZES, run_bench
from hankeldet.oracles import eigen_sign_count, hankel_matrix, naive_hankel_dets
from hankeldet.quadforms import cauchy_bound


def _fuzz_instances():
    rng = random.Random(2)
    return [random_power_series(rng, max_deg=12, bound=9) for _ in range(300)]


FUZZ = _fuzz_instances()
FUZZ_N = 14


def test_criterion_1_golden_example(acceptance, worked_h):
    start = time.perf_counter()
    oracle = naive_hankel_dets(series_expand(worked_h, 13), 7)
    oracle_ok = oracle == WORKED_DETS
    report = comp_hd(worked_h, 7)
    dets_ok = report.dets == WORKED_DETS
    got_b = [str(step.B) for step in report.quotients.steps[:4]]
    b_ok = got_b == WORKED_B
    elapsed = time.perf_counter() - start
    ok = oracle_ok and dets_ok and b_ok and elapsed < 1
    acceptance(1, ok, f"oracle={oracle_ok} dets={dets_ok} B0..B3={b_ok} in {elapsed:.3f}s (<1s)")
    assert oracle_ok, oracle
    assert dets_ok, report.dets
    assert b_ok, got_b
    assert elapsed < 1


def test_criterion_2_oracle_fuzz(acceptance):
    start = time.perf_counter()
    bad = []
    for idx, h in enumerate(FUZZ):
        coeffs = series_expand(h, 2 * FUZZ_N - 1)
        report = comp_hd(h, FUZZ_N)
        if report.dets != naive_hankel_dets(coeffs, FUZZ_N):
            bad.append((idx, "oracle"))
            continue
        d = report.kronecker_bound
        if d == 0:
            if any(report.dets):
                bad.append((idx, "zero series"))
            continue
        if d <= FUZZ_N and not report.dets[d - 1]:
            bad.append((idx, "H_d vanishes"))
        if any(report.dets[d:]):
            bad.append((idx, "H_t nonzero past d"))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60
    acceptance(2, ok, f"{len(FUZZ) - len(bad)}/{len(FUZZ)} instances agree, "
                      f"Kronecker checked, in {elapsed:.1f}s (<60s)")
    assert not bad, bad[:5]
    assert elapsed < 60


def _same_quotients(fast, slow):
    if len(fast) != len(slow) or fast.complete != slow.complete:
        return False
    return all(a.B == b.B and a.b == b.b and a.m == b.m for a, b in zip(fast, slow))


def test_criterion_3_half_gcd(acceptance):
    rng = random.Random(3)
    start = time.perf_counter()
    bad = []
    thresholds = [1, 2, 3, 4, 6, 8]
    for i in range(200):
        d0 = rng.randint(1, 40)
        f0 = random_poly(rng, d0)
        f1 = random_poly(rng, rng.randint(0, d0 - 1))
        fast = half_gcd_quotients(f0, f1, threshold=thresholds[i % len(thresholds)])
        if not _same_quotients(fast, sturm_chain_classical(f0, f1)[1]):
            bad.append(("QQ", i))
    F = GF()
    for i in range(50):
        d0 = rng.randint(1, 400)
        f0 = random_poly(rng, d0, F)
        f1 = random_poly(rng, rng.randint(0, d0 - 1), F)
        fast = half_gcd_quotients(f0, f1, threshold=[4, 16, 50][i % 3])
        if not _same_quotients(fast, sturm_chain_classical(f0, f1)[1]):
            bad.append(("GF", i))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60
    acceptance(3, ok, f"{250 - len(bad)}/250 pairs (200 over QQ, 50 over GF(p)) match "
                      f"in {elapsed:.1f}s (<60s)")
    assert not bad, bad[:5]
    assert elapsed < 60


def test_criterion_4_path_consistency(acceptance):
    order = 2 * FUZZ_N - 1
    bad = []
    checked = 0
    for idx, h in enumerate(FUZZ):
        report = comp_hd(h, FUZZ_N)
        q = report.quotients
        if q is None:  # zero series: no quotients to compare
            continue
        checked += 1
        need = min(FUZZ_N, report.kronecker_bound)
        hf = to_h_fraction(q)
        if dets_from_hfraction(hf, need) != dets_from_quotients(q, need):
            bad.append((idx, "dets"))
        if expand_h_fraction(hf, order) != series_expand(h, order):
            bad.append((idx, "series"))
    ok = not bad
    acceptance(4, ok, f"{checked - len(bad)}/{checked} nonzero instances: H-fraction dets "
                      f"and series round trip to order {order} agree")
    assert not bad, bad[:5]


def test_criterion_5_catalan(acceptance):
    start = time.perf_counter()
    oracle = naive_hankel_dets(CATALAN, 8)
    report = comp_hd_series(CATALAN, 8)
    elapsed = time.perf_counter() - start
    ok = report.dets == [1] * 8 and oracle == [1] * 8 and elapsed < 1
    acceptance(5, ok, f"dets={[str(v) for v in report.dets]} oracle agrees={oracle == report.dets} "
                      f"in {elapsed:.3f}s (<1s)")
    assert ok


def _eigen_signature(f):
    pos, neg = eigen_sign_count(hankel_matrix(series_expand(power_sum_series(f), 2 * f.degree - 1),
                                              f.degree))
    return pos - neg


def test_criterion_6_real_roots(acceptance):
    start = time.perf_counter()
    x = Poly.x()
    fixed = [
        (x * x - 1, 2),
        (x * x + 1, 0),
        ((x - 1) * (x - 2) * (x - 3) * (x - 4) * (x - 5), 5),
    ]
    bad = []
    for f, expected in fixed:
        M = cauchy_bound(f)
        counts = (count_real_roots_hankel(f), count_real_roots_sturm(f, -M, M), _eigen_signature(f))
        if counts != (expected,) * 3:
            bad.append((str(f), counts))
    rng = random.Random(6)
    done = 0
    while done < 200:
        f = random_poly(rng, rng.randint(1, 10))
        if f.gcd(f.derivative()).degree > 0:
            continue
        done += 1
        M = cauchy_bound(f)
        counts = (count_real_roots_hankel(f), count_real_roots_sturm(f, -M, M), _eigen_signature(f))
        if len(set(counts)) != 1:
            bad.append((str(f), counts))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 120
    acceptance(6, ok, f"3 fixed + {done} random squarefree polynomials: hankel = sturm = eigen "
                      f"({len(bad)} failures) in {elapsed:.1f}s (<120s)")
    assert not bad, bad[:5]
    assert elapsed < 120


def _shifted_index_signature(report, n):
    # the rejected reading: sum sign(b_{i+1}) over odd m_i
    steps = report.quotients.steps
    t = report.quotients.prefix_sums.index(n)
    total = 0
    for i in range(t + 1):
        if steps[i].m % 2:
            if i + 1 >= len(steps):
                return None
            total += 1 if steps[i + 1].b > 0 else -1
    return total


def test_criterion_7_signature(acceptance):
    rng = random.Random(7)
    start = time.perf_counter()
    bad = []
    shifted_disagrees = 0
    made = 0
    while made < 100:
        h = random_power_series(rng, max_deg=8, bound=9)
        if not h.num:
            continue
        report = comp_hd(h, 10)
        orders = [i for i in report.nonzero_indices if i <= 10]
        if not orders:
            continue
        n = rng.choice(orders)
        made += 1
        result = signature_via_sturm(h, n)
        frob = frobenius_signature([1] + report.dets[:n]).signature
        pos, neg = eigen_sign_count(hankel_matrix(series_expand(h, 2 * n - 1), n))
        if not (pos + neg == n and result.signature == frob == pos - neg
                and (result.signature - n) % 2 == 0):
            bad.append((str(h.num), str(h.den), n))
        if _shifted_index_signature(report, n) != pos - neg:
            shifted_disagrees += 1
    elapsed = time.perf_counter() - start
    ok = not bad and shifted_disagrees > 0
    acceptance(7, ok, f"{made - len(bad)}/{made} matrices: sturm = frobenius = eigen, parity ok; "
                      f"b_i reading adopted, b_(i+1) reading refuted on {shifted_disagrees} "
                      f"({elapsed:.1f}s)")
    assert not bad, bad[:5]
    assert shifted_disagrees > 0


@pytest.mark.slow
def test_criterion_8_asymptotic_trend(acceptance):
    start = time.perf_counter()
    rows = run_bench(DEFAULT_SIZES)
    elapsed = time.perf_counter() - start
    ratios = [row["ratio"] for row in rows[1:]]
    ok = all(r <= 2.9 for r in ratios) and elapsed < 120
    acceptance(8, ok, "op-count ratios per doubling " + ", ".join(f"{r:.3f}" for r in ratios)
               + f" (<=2.9) in {elapsed:.1f}s (<120s)")
    assert all(r <= 2.9 for r in ratios), ratios
    assert elapsed < 120
