"""Command-line front end.

Exit codes: 0 success, 2 parse or usage error, 3 violated mathematical
precondition, 4 oracle mismatch.
"""
from __future__ import annotations

import argparse
import json
import sys

from .bench import DEFAULT_SIZES, run_bench
from .coeffring.fields import DEFAULT_MODULUS, QQ, PrimeField, parse_rational
from .coeffring.poly import Poly, RationalFunction, series_expand
from .coeffring.textio import format_poly, parse_coeff_list, parse_poly
from .errors import (
    HankelError,
    OracleMismatchError,
    OrderedFieldRequired,
    ParseError,
    PreconditionError,
)
from .euclid import HGCD_THRESHOLD, half_gcd_quotients
from .hankelcf import comp_hd, comp_hd_series, construct_f0_f1, expand_h_fraction, to_h_fraction
from .oracles import MAX_ORACLE_ORDER, naive_hankel_dets
from .quadforms import (
    cauchy_bound,
    count_real_roots_hankel,
    count_real_roots_sturm,
    power_sum_series,
    signature_via_sturm,
)

EXIT_OK, EXIT_USAGE, EXIT_MATH, EXIT_ORACLE = 0, 2, 3, 4
MAX_N = 10**6
MAX_TEXT = 64 * 1024 * 1024


class UsageError(HankelError):
    pass


def _field(args):
    if args.field == "gfp":
        return PrimeField(args.modulus)
    return QQ


def _check_text(*texts):
    for text in texts:
        if text is not None and len(text) > MAX_TEXT:
            raise UsageError("input text exceeds 64 MiB")


def _series_input(args, field):
    """Returns ``("rational", h)`` or ``("coeffs", list)``."""
    _check_text(args.num, args.den, args.coeffs)
    if args.coeffs is not None:
        if args.num is not None or args.den is not None:
            raise UsageError("give either --coeffs or --num/--den, not both")
        return "coeffs", list(parse_coeff_list(args.coeffs, field).coeffs)
    if args.num is None:
        raise UsageError("an input is required: --num [--den] or --coeffs")
    num = parse_poly(args.num, field)
    den = parse_poly(args.den or "1", field)
    return "rational", RationalFunction(num, den)


def _require_terms(coeffs, n):
    if len(coeffs) < 2 * n - 1:
        raise PreconditionError(
            f"need at least 2n-1 = {2 * n - 1} coefficients, got {len(coeffs)}")
    return coeffs[: 2 * n - 1]


def _check_n(n):
    if n < 1:
        raise UsageError("--n must be at least 1")
    if n > MAX_N:
        raise UsageError(f"--n larger than {MAX_N} refused")


def _emit(args, payload, lines):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in lines:
            print(line)


def cmd_dets(args) -> int:
    field = _field(args)
    _check_n(args.n)
    kind, data = _series_input(args, field)
    if kind == "coeffs":
        coeffs = _require_terms(data, args.n)
        report = comp_hd_series(coeffs, args.n, field, threshold=args.threshold)
    else:
        report = comp_hd(data, args.n, threshold=args.threshold)
        coeffs = None
    text = [field.to_str(v) for v in report.dets]
    if args.oracle:
        if args.n > MAX_ORACLE_ORDER:
            raise UsageError(f"--oracle is capped at order {MAX_ORACLE_ORDER}")
        if coeffs is None:
            coeffs = series_expand(data, 2 * args.n - 1)
        expected = naive_hankel_dets(coeffs, args.n, field)
        diff = [(i + 1, field.to_str(a), field.to_str(b))
                for i, (a, b) in enumerate(zip(report.dets, expected)) if a != b]
        if diff:
            detail = "; ".join(f"H_{i}: fast {a} vs oracle {b}" for i, a, b in diff)
            raise OracleMismatchError(f"oracle mismatch: {detail}")
    payload = {
        "dets": text,
        "nonzero_indices": report.nonzero_indices,
        "kronecker_bound": report.kronecker_bound,
        "field": repr(field),
    }
    _emit(args, payload, [" ".join(text)])
    return EXIT_OK


def cmd_oracle_dets(args) -> int:
    field = _field(args)
    _check_n(args.n)
    if args.n > MAX_ORACLE_ORDER:
        raise UsageError(f"oracle order is capped at {MAX_ORACLE_ORDER}")
    kind, data = _series_input(args, field)
    if kind == "coeffs":
        coeffs = _require_terms(data, args.n)
    else:
        if not data.den[0]:
            raise PreconditionError("not a power series: denominator vanishes at 0")
        coeffs = series_expand(data, 2 * args.n - 1)
    dets = naive_hankel_dets(coeffs, args.n, field)
    text = [field.to_str(v) for v in dets]
    payload = {"dets": text, "nonzero_indices": [i + 1 for i, v in enumerate(dets) if v]}
    _emit(args, payload, [" ".join(text)])
    return EXIT_OK


def cmd_hfrac(args) -> int:
    field = _field(args)
    kind, data = _series_input(args, field)
    if kind == "coeffs":
        data = RationalFunction(Poly(data, field))
    if not data.num:
        _emit(args, {"levels": []}, ["empty fraction (zero series)"])
        return EXIT_OK
    f0, f1 = construct_f0_f1(data)
    need = None if args.n is None else args.n
    quotients = half_gcd_quotients(f0, f1, need=need, threshold=args.threshold)
    hf = to_h_fraction(quotients)
    levels = [{"v": field.to_str(l.v), "k": l.k, "u": format_poly(l.u)} for l in hf.levels]
    lines = [f"level {j}: v={l['v']} k={l['k']} u={l['u']}" for j, l in enumerate(levels)]
    payload = {"levels": levels}
    if args.check:
        order = args.order
        got = expand_h_fraction(hf, order)
        want = series_expand(data, order)
        bad = next((i for i, (a, b) in enumerate(zip(got, want)) if a != b), None)
        if bad is None:
            lines.append(f"matches through x^{order - 1}")
        else:
            lines.append(f"first mismatch at x^{bad}")
        payload["check"] = {"order": order, "first_mismatch": bad}
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_signature(args) -> int:
    _check_n(args.n)
    if args.power_sums_of is not None:
        _check_text(args.power_sums_of)
        h = power_sum_series(parse_poly(args.power_sums_of, QQ))
    else:
        kind, data = _series_input(args, QQ)
        h = RationalFunction(Poly(_require_terms(data, args.n))) if kind == "coeffs" else data
    result = signature_via_sturm(h, args.n, threshold=args.threshold)
    agree = " ".join(f"{k}={v}" for k, v in sorted(result.agreement.items()))
    payload = {"signature": result.signature, "n": result.n, "method": result.method,
               "agreement": result.agreement}
    _emit(args, payload, [f"signature {result.signature}", f"methods agree: {agree}"])
    return EXIT_OK


def cmd_roots(args) -> int:
    _check_text(args.poly)
    f = parse_poly(args.poly, QQ)
    if (args.a is None) != (args.b is None):
        raise UsageError("--a and --b go together")
    if args.a is None:
        count = count_real_roots_hankel(f, threshold=args.threshold)
        method = "hankel-signature"
    else:
        count = count_real_roots_sturm(f, parse_rational(args.a), parse_rational(args.b))
        method = "sturm"
    payload = {"root_count": count, "method": method}
    if args.a is None:
        payload["cauchy_bound"] = str(cauchy_bound(f))
    _emit(args, payload, [str(count)])
    return EXIT_OK


def cmd_bench(args) -> int:
    try:
        sizes = [int(s) for s in args.sizes.split(",")]
    except ValueError:
        raise ParseError(f"malformed size list {args.sizes!r}", args.sizes, 0) from None
    if any(n < 2 for n in sizes):
        raise UsageError("sizes must be at least 2")
    rows = run_bench(sizes, args.modulus, args.seed, args.threshold)
    lines = [f"{'n':>8} {'ops':>12} {'ratio':>7} {'wall_ms':>10} {'wall_ratio':>10}"]
    for row in rows:
        ratio = "" if row["ratio"] is None else f"{row['ratio']:.3f}"
        wall_ratio = "" if row["wall_ratio"] is None else f"{row['wall_ratio']:.3f}"
        lines.append(f"{row['n']:>8} {row['ops']:>12} {ratio:>7} "
                     f"{row['wall_ms']:>10.1f} {wall_ratio:>10}")
    _emit(args, {"rows": rows, "modulus": args.modulus, "seed": args.seed}, lines)
    return EXIT_OK


def _add_series_args(p, n_required=True):
    p.add_argument("--num", help="numerator N(x), e.g. 'x^2*(4+6*x)'")
    p.add_argument("--den", help="denominator D(x) with D(0) != 0 (default 1)")
    p.add_argument("--coeffs", help="series coefficients h0,h1,... (comma separated)")
    if n_required is not None:
        p.add_argument("--n", type=int, required=n_required, help="number of determinants")


def _add_common(p, field=True):
    p.add_argument("--json", action="store_true", help="structured output")
    p.add_argument("--threshold", type=int, default=HGCD_THRESHOLD,
                   help="half-GCD crossover degree")
    if field:
        p.add_argument("--field", choices=("q", "gfp"), default="q")
        p.add_argument("--modulus", type=int, default=DEFAULT_MODULUS)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hankeldet",
        description="Exact Hankel determinants, H-fractions, signatures and real-root counts.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dets", help="Hankel determinants H_1..H_n")
    _add_series_args(p)
    _add_common(p)
    p.add_argument("--oracle", action="store_true", help="cross-check with Bareiss determinants")
    p.set_defaults(func=cmd_dets)

    p = sub.add_parser("oracle-dets", help="H_1..H_n by naive Bareiss elimination")
    _add_series_args(p)
    _add_common(p)
    p.set_defaults(func=cmd_oracle_dets)

    p = sub.add_parser("hfrac", help="H-continued fraction of a series")
    _add_series_args(p, n_required=False)
    _add_common(p)
    p.add_argument("--check", action="store_true", help="round-trip against the series")
    p.add_argument("--order", type=int, default=15, help="terms compared by --check")
    p.set_defaults(func=cmd_hfrac)

    p = sub.add_parser("signature", help="signature of the order-n Hankel matrix")
    _add_series_args(p)
    p.add_argument("--power-sums-of", dest="power_sums_of", metavar="POLY",
                   help="use the power-sum series of POLY as input")
    _add_common(p, field=False)
    p.set_defaults(func=cmd_signature)

    p = sub.add_parser("roots", help="count real roots of a squarefree polynomial")
    p.add_argument("--poly", required=True)
    p.add_argument("--a", help="left end of (a, b]")
    p.add_argument("--b", help="right end of (a, b]")
    _add_common(p, field=False)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("bench", help="field-operation counts of the pipeline over GF(p)")
    p.add_argument("--sizes", default=",".join(str(n) for n in DEFAULT_SIZES))
    p.add_argument("--modulus", type=int, default=DEFAULT_MODULUS)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.add_argument("--threshold", type=int, default=HGCD_THRESHOLD)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OracleMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ORACLE
    except (PreconditionError, OrderedFieldRequired, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH
    except ValueError as exc:
        # e.g. a composite --modulus
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
