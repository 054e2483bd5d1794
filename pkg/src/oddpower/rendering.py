"""Deterministic renderers: plain text, LaTeX, and JSON.

All three formats emit terms in the canonical order (ascending total degree,
ties broken by ascending z-degree), so output is byte-identical across runs
for equal polynomials.  JSON is emitted without whitespace.

Schemas:
    polynomial   {"terms":[{"dx":i,"dz":j,"c":"<num>/<den>"}, ...]}
    coefficients {"m":<int>,"A":["<num>/<den>", ...]}         (index r = 0..m)
    report       {"y":...,"holds":...,<name>:{"terms":[...]}, ...}
"""

from __future__ import annotations

import json
from typing import TYPE_CHECKING, Literal

from .bipoly import BiPoly
from .rationals import Rational

if TYPE_CHECKING:
    from .coefficients import CoeffVector
    from .engine import IdentityReport

__all__ = [
    "RenderFormat",
    "FORMATS",
    "render",
    "render_plain",
    "render_latex",
    "render_json",
    "poly_terms",
    "coeff_vector_json",
    "identity_report_json",
]

RenderFormat = Literal["plain", "latex", "json"]
FORMATS: tuple[str, ...] = ("plain", "latex", "json")


def render(poly: BiPoly, fmt: RenderFormat) -> str:
    """Render ``poly`` in the requested format."""
    if fmt == "plain":
        return render_plain(poly)
    if fmt == "latex":
        return render_latex(poly)
    if fmt == "json":
        return render_json(poly)
    raise ValueError(f"unknown format {fmt!r}, expected one of {FORMATS}")


def render_plain(poly: BiPoly) -> str:
    """Canonical plain text, e.g. ``3 x z - 3 z^2 + 3 x z^2 - 2 z^3``."""
    return str(poly)


def _latex_magnitude(value: Rational) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return rf"\frac{{{value.numerator}}}{{{value.denominator}}}"


def render_latex(poly: BiPoly) -> str:
    """LaTeX source with braced exponents and ``\\frac`` coefficients."""
    if poly.is_zero():
        return "0"
    parts: list[str] = []
    for dx, dz, coeff in poly.terms():
        sign = "-" if coeff < 0 else "+"
        magnitude = -coeff if coeff < 0 else coeff
        factors: list[str] = []
        if magnitude != 1 or (dx == 0 and dz == 0):
            factors.append(_latex_magnitude(magnitude))
        if dx:
            factors.append("x" if dx == 1 else f"x^{{{dx}}}")
        if dz:
            factors.append("z" if dz == 1 else f"z^{{{dz}}}")
        body = " ".join(factors)
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


def poly_terms(poly: BiPoly) -> list[dict]:
    """Term list for the JSON schema, in canonical order."""
    return [
        {"dx": dx, "dz": dz, "c": f"{c.numerator}/{c.denominator}"}
        for dx, dz, c in poly.terms()
    ]


def render_json(poly: BiPoly) -> str:
    return json.dumps({"terms": poly_terms(poly)}, separators=(",", ":"))


def coeff_vector_json(row: "CoeffVector") -> str:
    values = [f"{a.numerator}/{a.denominator}" for a in row.values]
    return json.dumps({"m": row.m, "A": values}, separators=(",", ":"))


def identity_report_json(report: "IdentityReport") -> str:
    payload = {
        "y": report.y,
        "holds": report.holds,
        "poly": {"terms": poly_terms(report.poly)},
        "partial_x": {"terms": poly_terms(report.partial_x)},
        "partial_z": {"terms": poly_terms(report.partial_z)},
        "partial_sum": {"terms": poly_terms(report.partial_sum)},
        "diagonal_of_sum": {"terms": poly_terms(report.diagonal_of_sum)},
        "expected_derivative": {"terms": poly_terms(report.expected_derivative)},
        "residual": {"terms": poly_terms(report.residual)},
    }
    return json.dumps(payload, separators=(",", ":"))
