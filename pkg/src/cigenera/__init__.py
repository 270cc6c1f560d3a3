"""Exact Hirzebruch genera of complete intersections X_n(d_1, ..., d_r)."""

__version__ = "0.1.0"

from .arith import binomial_general, binomial_reflect_check, format_rational
from .ci import CompleteIntersection, TwistedGenusQuery, normalize, parse_ci
from .closed import ahat_closed, ak_closed, ak_from_todd, chi_K_closed, todd_closed, todd_recurrence
from .oracles import (
    ChiYPolynomial,
    GenusLabel,
    build_q_series,
    chi_twist_genfun,
    chi_y_polynomial,
    euler_characteristic,
    genus_chern_root,
    signature,
    todd_genfun,
)
from .series import TruncatedSeries

__all__ = [
    "ChiYPolynomial",
    "CompleteIntersection",
    "GenusLabel",
    "TruncatedSeries",
    "TwistedGenusQuery",
    "ahat_closed",
    "ak_closed",
    "ak_from_todd",
    "binomial_general",
    "binomial_reflect_check",
    "build_q_series",
    "chi_K_closed",
    "chi_twist_genfun",
    "chi_y_polynomial",
    "euler_characteristic",
    "format_rational",
    "genus_chern_root",
    "normalize",
    "parse_ci",
    "signature",
    "todd_closed",
    "todd_genfun",
    "todd_recurrence",
]
