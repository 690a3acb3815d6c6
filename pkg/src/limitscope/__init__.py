"""Exact analysis of bivariate rational functions near points of discontinuity."""

__version__ = "0.1.0"

from .asympt import CurveSpec, LimitResult, limit_along_curve, parse_curve, substitute_poly
from .exactalg import AlgebraicNumber, compare_exponents, make_exponent, sqrt_rational
from .genseries import GenSeries, LazySeries, LogSeries, series_add, series_mul, series_pow
from .limits import (
    ExistenceVerdict,
    ValueInterval,
    certify_denominator_sign,
    classify_point,
    limit_exists,
    limiting_value_interval,
    sequence_character,
)
from .oracle import SampleConfig, sample_along_curve, sample_limit_set
from .polyfun import (
    BiPoly,
    Point,
    RationalFn,
    X,
    Y,
    bounded_discontinuity_points,
    parse_rational_function,
    point_value,
    translate,
)
from .puiseux import newton_polygon, real_branches

__all__ = [
    "AlgebraicNumber", "BiPoly", "CurveSpec", "ExistenceVerdict", "GenSeries", "LazySeries",
    "LimitResult", "LogSeries", "Point", "RationalFn", "SampleConfig", "ValueInterval", "X", "Y",
    "bounded_discontinuity_points", "certify_denominator_sign", "classify_point",
    "compare_exponents", "limit_along_curve", "limit_exists", "limiting_value_interval",
    "make_exponent", "newton_polygon", "parse_curve", "parse_rational_function", "point_value",
    "real_branches", "sample_along_curve", "sample_limit_set", "sequence_character",
    "series_add", "series_mul", "series_pow", "sqrt_rational", "substitute_poly", "translate",
]
