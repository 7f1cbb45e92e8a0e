"""Exact dynamical degrees of compositions of point reflections on cubic hypersurfaces."""

from fractions import Fraction

from ._core import (
    RefdynError,
    avoidance_check,
    billiard_configuration,
    char_poly,
    check_configuration,
    degree_tuple_generic,
    dominant_growth,
    iterate,
    minimal_poly,
    reproduce,
    run_cli,
    search_configuration,
    verify_minimal_pairs,
)

__all__ = [
    "RefdynError",
    "avoidance_check",
    "billiard_configuration",
    "char_poly",
    "check_configuration",
    "degree_tuple_generic",
    "dominant_growth",
    "iterate",
    "minimal_poly",
    "poly_fractions",
    "reproduce",
    "run_cli",
    "search_configuration",
    "verify_minimal_pairs",
]


def poly_fractions(coeffs):
    """Rational-string coefficients as Fractions, lowest degree first."""
    return [Fraction(c) for c in coeffs]
