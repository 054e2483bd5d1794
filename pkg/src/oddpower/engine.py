"""Build the expansion polynomial family and verify its derivative identity.

``build_poly(y)`` assembles the two-variable polynomial whose diagonal
z = x collapses to the odd power x^(2y+1).  The central fact checked here
is that the sum of its two partial derivatives, restricted to the diagonal,
equals the ordinary derivative (2y+1) x^(2y) of that odd power.  All checks
are symbolic zero-residual comparisons in exact arithmetic, which proves
the identity for every real point at once rather than sampling it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .bipoly import BiPoly
from .coefficients import solve_coeffs
from .powersums import conv_sum
from .rationals import Rational

__all__ = [
    "IdentityReport",
    "build_poly",
    "derivative_sum",
    "odd_power",
    "check_diagonal",
    "check_derivative_identity",
    "eval_derivative_at",
]


@dataclass(frozen=True)
class IdentityReport:
    """Everything the derivative-identity check produced for one order y.

    ``holds`` is True exactly when ``residual`` is the zero polynomial,
    where residual = diagonal_of_sum - expected_derivative.
    """

    y: int
    poly: BiPoly
    partial_x: BiPoly
    partial_z: BiPoly
    partial_sum: BiPoly
    diagonal_of_sum: BiPoly
    expected_derivative: BiPoly
    residual: BiPoly
    holds: bool


@lru_cache(maxsize=None)
def build_poly(y: int) -> BiPoly:
    """The y-th member of the family: sum_r A_r * conv_sum(r).

    Degree 2y + 1 in z and y in x; on the diagonal z = x it equals
    x^(2y+1) exactly.
    """
    row = solve_coeffs(y)
    acc = BiPoly.zero()
    for r, a in enumerate(row):
        if a:
            acc = acc + conv_sum(r) * a
    return acc


@lru_cache(maxsize=None)
def derivative_sum(y: int) -> BiPoly:
    """Sum of the two partial derivatives of build_poly(y)."""
    poly = build_poly(y)
    return poly.diff("x") + poly.diff("z")


def odd_power(y: int) -> BiPoly:
    """The monomial x^(2y+1)."""
    if y < 0:
        raise ValueError(f"y must be non-negative, got {y}")
    return BiPoly.monomial(2 * y + 1, 0)


def check_diagonal(y: int) -> bool:
    """True iff build_poly(y) collapses to x^(2y+1) on the diagonal."""
    return build_poly(y).diagonal() == odd_power(y)


def check_derivative_identity(y: int) -> IdentityReport:
    """Symbolically verify that the partial sum on the diagonal is the
    ordinary derivative (2y+1) x^(2y) of the odd power."""
    poly = build_poly(y)
    partial_x = poly.diff("x")
    partial_z = poly.diff("z")
    partial_sum = partial_x + partial_z
    diagonal_of_sum = partial_sum.diagonal()
    expected = BiPoly.monomial(2 * y, 0, 2 * y + 1)
    residual = diagonal_of_sum - expected
    return IdentityReport(
        y=y,
        poly=poly,
        partial_x=partial_x,
        partial_z=partial_z,
        partial_sum=partial_sum,
        diagonal_of_sum=diagonal_of_sum,
        expected_derivative=expected,
        residual=residual,
        holds=residual.is_zero(),
    )


def eval_derivative_at(y: int, u: int | Rational) -> Rational:
    """The partial sum evaluated at (u, u); equals (2y+1) u^(2y)."""
    return derivative_sum(y)(u, u)
