"""Exact coefficient tower: rationals, polynomials, series, rational functions."""
from .finite_field import modp_factor_degrees
from .linalg import inverse, linear_solve_exact, nullspace, rank
from .poly import ZERO_DEGREE, Poly, chebyshev_T
from .ratfunc import RationalFunction
from .rational import ONE, ZERO, Q, Rational, to_fraction, to_str
from .series import TruncatedSeries, eval_poly_at_series
from .sturm import INF, sturm_chain, sturm_count

__all__ = [
    "INF",
    "ONE",
    "ZERO",
    "ZERO_DEGREE",
    "Poly",
    "Q",
    "Rational",
    "RationalFunction",
    "TruncatedSeries",
    "chebyshev_T",
    "eval_poly_at_series",
    "inverse",
    "linear_solve_exact",
    "modp_factor_degrees",
    "nullspace",
    "rank",
    "sturm_chain",
    "sturm_count",
    "to_fraction",
    "to_str",
]
