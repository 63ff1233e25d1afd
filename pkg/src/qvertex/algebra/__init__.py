"""Exact ring tower: Laurent polynomials, rational functions, truncated series."""
from .factored import Factored, VanishingFactor, sum_factored
from .laurent import AlgebraError, ExponentOverflow, LaurentPolynomial, TableMismatch, VariableTable
from .rational import RationalFunction
from .series import TruncatedSeries
from .subst import Cocharacter, MonomialMap, PoleError, limit_at_zero, limit_factored, substitute_monomials
from .textform import ParseError, format_polynomial, format_rational, parse_polynomial

__all__ = [
    "AlgebraError",
    "Cocharacter",
    "ExponentOverflow",
    "Factored",
    "LaurentPolynomial",
    "MonomialMap",
    "ParseError",
    "PoleError",
    "RationalFunction",
    "TableMismatch",
    "TruncatedSeries",
    "VanishingFactor",
    "VariableTable",
    "format_polynomial",
    "format_rational",
    "limit_at_zero",
    "limit_factored",
    "parse_polynomial",
    "substitute_monomials",
    "sum_factored",
]
