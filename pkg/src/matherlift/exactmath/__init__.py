"""Exact rational algebra: polynomials, Groebner bases, ideal operations,
Hilbert dimension/degree, truncated power series and linear algebra."""

from fractions import Fraction as Rational

from .groebner import GroebnerBasis, groebner, s_polynomial
from .hilbert import HilbertData, hilbert_dim_degree
from .ideals import (
    eliminate,
    ideal_contains,
    ideal_quotient,
    ideal_saturate,
    intersect,
    quotient_by_element,
    same_ideal,
    saturate_rabinowitsch,
)
from .linalg import RationalMatrix, matrix_rank, solve
from .poly import (
    DEGREVLEX,
    LEX,
    Ideal,
    MonomialOrder,
    MultiPoly,
    as_rational,
    block_order,
    gradient,
    poly_add,
    poly_mul,
    poly_scale,
)
from .series import DEFAULT_TRUNCATION, PowerSeries1, series_order

__all__ = [
    "DEFAULT_TRUNCATION", "DEGREVLEX", "LEX", "GroebnerBasis", "HilbertData", "Ideal",
    "MonomialOrder", "MultiPoly", "PowerSeries1", "Rational", "RationalMatrix", "as_rational",
    "block_order", "eliminate", "gradient", "groebner", "hilbert_dim_degree", "ideal_contains",
    "ideal_quotient", "ideal_saturate", "intersect", "matrix_rank", "poly_add", "poly_mul",
    "poly_scale", "quotient_by_element", "s_polynomial", "same_ideal", "saturate_rabinowitsch",
    "series_order", "solve",
]
