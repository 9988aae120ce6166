"""Exact coefficient fields and dense univariate polynomials."""
from .fields import DEFAULT_MODULUS, GF, QQ, Field, PrimeField, RationalField, parse_rational
from .ops import OpCounter, count_ops
from .poly import (
    Poly,
    RationalFunction,
    poly_add,
    poly_divrem,
    poly_eval,
    poly_mul,
    poly_sub,
    reverse,
    series_expand,
)
from .textio import format_coeffs, format_poly, parse_coeff_list, parse_poly

__all__ = [
    "DEFAULT_MODULUS", "GF", "QQ", "Field", "PrimeField", "RationalField", "parse_rational",
    "OpCounter", "count_ops", "Poly", "RationalFunction", "poly_add", "poly_divrem",
    "poly_eval", "poly_mul", "poly_sub", "reverse", "series_expand", "format_coeffs",
    "format_poly", "parse_coeff_list", "parse_poly",
]
