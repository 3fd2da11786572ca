"""Exact Legendre-basis projection tools.

Rational results come back as ``fractions.Fraction``; series are lists of
Legendre coefficients, lowest degree first.
"""

from fractions import Fraction

from . import _legproj
from ._legproj import QuadratureNotSaturated, builtin_function_names, check_bound, run_cli

__all__ = [
    "QuadratureNotSaturated",
    "builtin_function_names",
    "check_bound",
    "growth_scan",
    "primitive",
    "psi",
    "psi_inner_closed",
    "psi_norm_sq_closed",
    "q1_norm_sq_closed",
    "q_norm_sq",
    "q_poly",
    "run_cli",
    "wz_sum",
    "wz_sum_closed",
]


def _series(coeffs):
    return [Fraction(c) for c in coeffs]


def psi(i, n):
    """n-th primitive of L_i vanishing with its derivatives at -1; needs i >= n."""
    return _series(_legproj.psi(i, n))


def primitive(i, n):
    """n-th primitive of L_i for any i, n >= 0."""
    return _series(_legproj.primitive(i, n))


def psi_norm_sq_closed(p, n):
    return Fraction(_legproj.psi_norm_sq_closed(p, n))


def psi_inner_closed(p, k, n):
    return Fraction(_legproj.psi_inner_closed(p, k, n))


def q_poly(p, nu):
    return _series(_legproj.q_poly(p, nu))


def q_norm_sq(p, nu):
    return Fraction(_legproj.q_norm_sq(p, nu))


def q1_norm_sq_closed(p):
    return Fraction(_legproj.q1_norm_sq_closed(p))


def wz_sum(p, nu):
    return Fraction(_legproj.wz_sum(p, nu))


def wz_sum_closed(p, nu):
    return Fraction(_legproj.wz_sum_closed(p, nu))


def growth_scan(nu, p_lo, p_hi):
    """(p, ||q_{p,nu}||^2, ratio to p^(2nu-1)) rows."""
    return [(p, Fraction(a), Fraction(b)) for p, a, b in _legproj.growth_scan(nu, p_lo, p_hi)]
