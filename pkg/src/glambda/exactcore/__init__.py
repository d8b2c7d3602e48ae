"""Exact arithmetic: Q(lambda), polynomials in H, truncated series, quasi-polynomials."""

from fractions import Fraction

from .scalar import LAMBDA, LambdaScalar, PoleError
from .poly import (
    H, HPoly, alpha, difference, eval_alpha, pochhammer, shift, t_poly, t_product,
)
from .series import (
    DEFAULT_ORDER, NonUnitSeries, TruncatedSeries, exp_linear, one_minus_exp_minus_2t,
    reciprocal, series_mul,
)
from .quasipoly import (
    QuasiPolynomial, annihilator, qp_add, qp_derive, qp_scale_exp, qp_to_series,
    root_multiplicity,
)

Rational = Fraction

__all__ = [
    "Fraction", "Rational", "LAMBDA", "LambdaScalar", "PoleError",
    "H", "HPoly", "alpha", "difference", "eval_alpha", "pochhammer", "shift",
    "t_poly", "t_product",
    "DEFAULT_ORDER", "NonUnitSeries", "TruncatedSeries", "exp_linear",
    "one_minus_exp_minus_2t", "reciprocal", "series_mul",
    "QuasiPolynomial", "annihilator", "qp_add", "qp_derive", "qp_scale_exp",
    "qp_to_series", "root_multiplicity",
]
