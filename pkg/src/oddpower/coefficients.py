"""Coefficient rows of the odd-power expansion identity.

For each order m there is a unique row A_0..A_m of rationals such that

    sum_{k=1..n} sum_{r=0..m} A_r * k^r * (n-k)^r  =  n^(2m+1)

holds for every positive integer n.  ``solve_coeffs`` derives the row
directly from that identity by triangular elimination, and
``verify_identity`` checks it the hard way, by literal summation with exact
integer arithmetic and no polynomial machinery at all.  The two routes are
deliberately independent of each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .bipoly import BiPoly
from .powersums import conv_sum
from .rationals import Rational

__all__ = ["CoeffVector", "InconsistencyError", "solve_coeffs", "verify_identity"]


class InconsistencyError(ArithmeticError):
    """The triangular solve left a nonzero residual.

    The expansion identity guarantees a consistent system, so this firing
    means a bug in the polynomial machinery, not bad input.
    """


@dataclass(frozen=True)
class CoeffVector:
    """The coefficient row A_0..A_m for a fixed order m."""

    m: int
    values: tuple[Rational, ...]

    def __post_init__(self):
        if len(self.values) != self.m + 1:
            raise ValueError(f"expected {self.m + 1} values, got {len(self.values)}")

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, r: int) -> Rational:
        return self.values[r]


@lru_cache(maxsize=None)
def solve_coeffs(m: int) -> CoeffVector:
    """Solve for the unique row making the odd-power expansion an identity.

    Let D_r(n) = conv_sum(r) on the diagonal z = x, an odd polynomial of
    degree 2r + 1.  The rows are found top-down: for r = m, m-1, ..., 0 read
    A_r off the n^(2r+1) coefficient of the remaining residual (divided by
    the leading coefficient of D_r) and subtract A_r * D_r.  Even-degree
    coefficients must cancel on their own; after r = 0 the residual has to
    vanish identically or the solve raises :class:`InconsistencyError`.
    """
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    diagonals = [conv_sum(r).diagonal() for r in range(m + 1)]
    residual = BiPoly.monomial(2 * m + 1, 0)
    values: list[Rational] = [Rational(0)] * (m + 1)
    for r in range(m, -1, -1):
        lead = diagonals[r].coefficient(2 * r + 1, 0)
        a = residual.coefficient(2 * r + 1, 0) / lead
        values[r] = a
        if a:
            residual = residual - diagonals[r] * a
    if residual:
        raise InconsistencyError(f"nonzero residual after solving order {m}: {residual}")
    return CoeffVector(m, tuple(values))


def verify_identity(m: int, n_max: int) -> bool:
    """Check the expansion literally for every n in 1..n_max.

    Computes sum_{k=1..n} sum_{r} A_r * (k(n-k))^r by direct summation, with
    plain integers wherever the solved row is integral, and compares against
    n^(2m+1).  Returns False on the first mismatch; no polynomial code is
    involved, so this is an independent oracle for the solver.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be positive, got {n_max}")
    row = [a.numerator if a.denominator == 1 else a for a in solve_coeffs(m).values]
    for n in range(1, n_max + 1):
        total = 0
        for k in range(1, n + 1):
            base = k * (n - k)
            inner = 0
            for a in reversed(row):
                inner = inner * base + a
            total += inner
        if total != n ** (2 * m + 1):
            return False
    return True
