"""Exact-rational generating-function toolkit for Bernoulli/Euler-type families."""

from .exact import (
    DivisionByNonUnit,
    Egf,
    InsufficientVanishing,
    NonNilpotentInner,
    NotSquare,
    Rational,
    RationalMatrix,
    det,
    egf_add,
    egf_compose,
    egf_div,
    egf_div_shifted,
    egf_exp_linear,
    egf_mul,
    egf_pow,
    format_rational,
    parse_rational,
)
from .classical import (
    EulerConvention,
    alternating_sum,
    bernoulli_det,
    bernoulli_numbers,
    bernoulli_polynomial,
    euler_det,
    euler_numbers,
    power_sum,
    power_sum_closed,
)
from .multifamily import (
    CappedSum,
    DegenerateParams,
    LogParams,
    MultiPolyEulerSpec,
    addition_rhs,
    combined_rhs,
    combined_rhs_printed,
    cor1_rhs,
    multi_poly_bernoulli,
    multi_poly_euler,
    multi_poly_euler_ab,
    multi_poly_euler_xab,
    poly_euler_abc,
    thm1_rhs,
    thm2_rhs,
    thm3_explicit,
    thm4_explicit,
)
from .polyfamily import TooLarge, lonesum_count, poly_bernoulli, poly_euler, poly_euler_sasaki
from .polylog import KVector, li_of_inner, li_series, multi_li_series, parse_kvector

__version__ = "0.1.0"

__all__ = [
    "CappedSum",
    "DegenerateParams",
    "DivisionByNonUnit",
    "Egf",
    "EulerConvention",
    "InsufficientVanishing",
    "KVector",
    "LogParams",
    "MultiPolyEulerSpec",
    "NonNilpotentInner",
    "NotSquare",
    "Rational",
    "RationalMatrix",
    "TooLarge",
    "addition_rhs",
    "alternating_sum",
    "bernoulli_det",
    "bernoulli_numbers",
    "bernoulli_polynomial",
    "combined_rhs",
    "combined_rhs_printed",
    "cor1_rhs",
    "det",
    "egf_add",
    "egf_compose",
    "egf_div",
    "egf_div_shifted",
    "egf_exp_linear",
    "egf_mul",
    "egf_pow",
    "euler_det",
    "euler_numbers",
    "format_rational",
    "li_of_inner",
    "li_series",
    "lonesum_count",
    "multi_li_series",
    "multi_poly_bernoulli",
    "multi_poly_euler",
    "multi_poly_euler_ab",
    "multi_poly_euler_xab",
    "parse_kvector",
    "parse_rational",
    "poly_bernoulli",
    "poly_euler",
    "poly_euler_abc",
    "poly_euler_sasaki",
    "power_sum",
    "power_sum_closed",
    "thm1_rhs",
    "thm2_rhs",
    "thm3_explicit",
    "thm4_explicit",
]
