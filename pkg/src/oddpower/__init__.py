"""Exact computer algebra for the odd-power derivative identity.

The package builds, for each order y, a two-variable polynomial whose
diagonal z = x collapses to x^(2y+1), differentiates it symbolically, and
proves (by exact zero-residual comparison) that the sum of its partial
derivatives on the diagonal is the ordinary derivative (2y+1) x^(2y).
"""

from .bipoly import BiPoly, X, Z
from .coefficients import CoeffVector, InconsistencyError, solve_coeffs, verify_identity
from .engine import (
    IdentityReport,
    build_poly,
    check_derivative_identity,
    check_diagonal,
    derivative_sum,
    eval_derivative_at,
    odd_power,
)
from .fixtures import Fixture, load_fixtures
from .parsing import PolyParseError, UnknownVariableError, parse_poly
from .powersums import conv_sum, power_sum, shift_z
from .rationals import Rational, bernoulli, binomial
from .rendering import render

__version__ = "0.1.0"

__all__ = [
    "BiPoly",
    "X",
    "Z",
    "CoeffVector",
    "InconsistencyError",
    "solve_coeffs",
    "verify_identity",
    "IdentityReport",
    "build_poly",
    "check_derivative_identity",
    "check_diagonal",
    "derivative_sum",
    "eval_derivative_at",
    "odd_power",
    "Fixture",
    "load_fixtures",
    "PolyParseError",
    "UnknownVariableError",
    "parse_poly",
    "conv_sum",
    "power_sum",
    "shift_z",
    "Rational",
    "bernoulli",
    "binomial",
    "render",
]
