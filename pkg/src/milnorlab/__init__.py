"""Exact local invariants of plane algebraic curves at the origin.

Order, tangent cone, intersection multiplicity and Milnor number over Q,
together with checkers for the Milnor-number bound
``mu_0(f) <= (d-1)^2 - floor(d/2)`` for non-homogeneous curves of degree d
and for the curves attaining it.
"""

from .extnat import INFINITY, ExtNat
from .gcd import gcd_bivariate, squarefree_part_binary
from .local import (
    TangentData,
    intersection_multiplicity,
    is_tangent_line,
    is_transverse,
    milnor_number,
    shares_common_tangent,
    tangent_data,
)
from .parsing import PolynomialSyntaxError, format_poly, parse_poly
from .poly import BinaryForm, BiPoly, lowest_form, order_at_origin, partial_derivative, poly_arith

__all__ = [
    "INFINITY",
    "BiPoly",
    "BinaryForm",
    "ExtNat",
    "PolynomialSyntaxError",
    "TangentData",
    "format_poly",
    "gcd_bivariate",
    "intersection_multiplicity",
    "is_tangent_line",
    "is_transverse",
    "lowest_form",
    "milnor_number",
    "order_at_origin",
    "parse_poly",
    "partial_derivative",
    "poly_arith",
    "shares_common_tangent",
    "squarefree_part_binary",
    "tangent_data",
]

__version__ = "0.1.0"
