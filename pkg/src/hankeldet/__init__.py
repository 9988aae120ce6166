"""Exact Hankel determinants of power series via generalized Sturm sequences.

The main entry point is :func:`comp_hd`, which returns the determinants
``H_1..H_n`` of a rational power series with a half-GCD quotient extraction.
"""
from .coeffring import GF, QQ, Poly, PrimeField, RationalFunction, count_ops, series_expand
from .errors import (
    EndpointRootError,
    HankelError,
    InsufficientQuotientsError,
    NotAPowerSeriesError,
    NotSquarefreeError,
    OracleMismatchError,
    OrderedFieldRequired,
    ParseError,
    PreconditionError,
    SingularHankelError,
)
from .euclid import QuotientSequence, QuotientStep, half_gcd_quotients, sturm_chain_classical
from .hankelcf import (
    HankelReport,
    HFraction,
    HLevel,
    comp_hd,
    comp_hd_series,
    construct_f0_f1,
    det_closed_form,
    dets_from_hfraction,
    dets_from_quotients,
    expand_h_fraction,
    kronecker_bound,
    to_h_fraction,
)
from .quadforms import (
    SignatureResult,
    SignVariationCount,
    count_real_roots_hankel,
    count_real_roots_sturm,
    frobenius_signature,
    power_sum_series,
    sign_variations,
    signature_via_sturm,
)

__version__ = "0.1.0"
