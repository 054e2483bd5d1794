"""Sparse exact bivariate polynomials in the variables x and z.

A ``BiPoly`` maps exponent pairs ``(deg_x, deg_z)`` to nonzero ``Rational``
coefficients.  The zero polynomial is the empty map, so structural equality
of the maps is polynomial equality and no normalization is ever deferred.
Instances are immutable after construction and safe to share across threads.

Canonical term order, used for iteration and rendering: ascending total
degree, ties broken by ascending z-degree.  For two variables this is a
total order on exponent pairs, so output is deterministic.

Coefficients may be given as ``int`` or ``Rational``; anything else (in
particular ``float``) is rejected to preserve exactness.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Union

from .rationals import Rational

__all__ = ["BiPoly", "MonomialKey", "X", "Z"]

MonomialKey = tuple[int, int]
CoefficientLike = Union[int, Rational]


def _as_rational(value: CoefficientLike) -> Rational:
    if isinstance(value, Rational):
        return value
    if isinstance(value, int):
        return Rational(value)
    raise TypeError(f"coefficients must be int or Rational, got {type(value).__name__}")


class BiPoly:
    """An exact polynomial in x and z over the rationals.

    Supports ``+``, ``-``, ``*``, ``**`` (with each other and with scalars),
    partial differentiation via :meth:`diff`, evaluation by calling the
    instance, and the diagonal substitution z -> x via :meth:`diagonal`.
    """

    __slots__ = ("_terms", "_sorted", "_hash")

    def __init__(
        self,
        terms: Mapping[MonomialKey, CoefficientLike]
        | Iterable[tuple[MonomialKey, CoefficientLike]] = (),
    ):
        items = terms.items() if isinstance(terms, Mapping) else terms
        combined: dict[MonomialKey, Rational] = {}
        for (deg_x, deg_z), coeff in items:
            if deg_x < 0 or deg_z < 0:
                raise ValueError(f"degrees must be non-negative, got ({deg_x}, {deg_z})")
            key = (int(deg_x), int(deg_z))
            total = combined.get(key, _ZERO) + _as_rational(coeff)
            if total:
                combined[key] = total
            elif key in combined:
                del combined[key]
        self._terms = combined
        self._sorted: list[MonomialKey] | None = None
        self._hash: int | None = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> BiPoly:
        return cls()

    @classmethod
    def one(cls) -> BiPoly:
        return cls.constant(1)

    @classmethod
    def constant(cls, value: CoefficientLike) -> BiPoly:
        return cls({(0, 0): value})

    @classmethod
    def monomial(cls, deg_x: int, deg_z: int, coeff: CoefficientLike = 1) -> BiPoly:
        return cls({(deg_x, deg_z): coeff})

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, deg_x: int, deg_z: int) -> Rational:
        """Coefficient of x^deg_x z^deg_z, zero if the monomial is absent."""
        return self._terms.get((deg_x, deg_z), _ZERO)

    def _keys(self) -> list[MonomialKey]:
        if self._sorted is None:
            self._sorted = sorted(self._terms, key=lambda k: (k[0] + k[1], k[1]))
        return self._sorted

    def terms(self) -> Iterator[tuple[int, int, Rational]]:
        """Yield (deg_x, deg_z, coefficient) triples in canonical order."""
        for key in self._keys():
            yield key[0], key[1], self._terms[key]

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(dx + dz for dx, dz in self._terms)

    def degree_x(self) -> int:
        if not self._terms:
            return -1
        return max(dx for dx, _ in self._terms)

    def degree_z(self) -> int:
        if not self._terms:
            return -1
        return max(dz for _, dz in self._terms)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: BiPoly | CoefficientLike) -> BiPoly:
        if not isinstance(other, BiPoly):
            try:
                other = BiPoly.constant(_as_rational(other))
            except TypeError:
                return NotImplemented
        out = dict(self._terms)
        for key, coeff in other._terms.items():
            total = out.get(key, _ZERO) + coeff
            if total:
                out[key] = total
            elif key in out:
                del out[key]
        return _from_canonical(out)

    __radd__ = __add__

    def __neg__(self) -> BiPoly:
        return _from_canonical({key: -coeff for key, coeff in self._terms.items()})

    def __sub__(self, other: BiPoly | CoefficientLike) -> BiPoly:
        if isinstance(other, BiPoly):
            return self.__add__(-other)
        try:
            return self.__add__(-_as_rational(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other: CoefficientLike) -> BiPoly:
        return (-self).__add__(other)

    def __mul__(self, other: BiPoly | CoefficientLike) -> BiPoly:
        if not isinstance(other, BiPoly):
            try:
                scalar = _as_rational(other)
            except TypeError:
                return NotImplemented
            if not scalar:
                return BiPoly.zero()
            return _from_canonical({key: coeff * scalar for key, coeff in self._terms.items()})
        out: dict[MonomialKey, Rational] = {}
        for (ax, az), ac in self._terms.items():
            for (bx, bz), bc in other._terms.items():
                key = (ax + bx, az + bz)
                total = out.get(key, _ZERO) + ac * bc
                if total:
                    out[key] = total
                elif key in out:
                    del out[key]
        return _from_canonical(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> BiPoly:
        if not isinstance(exponent, int):
            raise TypeError("exponent must be an int")
        if exponent < 0:
            raise ValueError("exponent must be non-negative")
        result = BiPoly.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- calculus and substitution ----------------------------------------

    def diff(self, var: str) -> BiPoly:
        """Exact partial derivative with respect to ``"x"`` or ``"z"``."""
        if var not in ("x", "z"):
            raise ValueError(f"var must be 'x' or 'z', got {var!r}")
        out: dict[MonomialKey, Rational] = {}
        for (dx, dz), coeff in self._terms.items():
            if var == "x":
                if dx == 0:
                    continue
                out[(dx - 1, dz)] = coeff * dx
            else:
                if dz == 0:
                    continue
                out[(dx, dz - 1)] = coeff * dz
        return _from_canonical(out)

    def __call__(self, x_val: CoefficientLike, z_val: CoefficientLike) -> Rational:
        """Exact value at (x_val, z_val)."""
        x_val = _as_rational(x_val)
        z_val = _as_rational(z_val)
        x_pow: dict[int, Rational] = {0: Rational(1)}
        z_pow: dict[int, Rational] = {0: Rational(1)}
        total = Rational(0)
        for (dx, dz), coeff in self._terms.items():
            xp = x_pow.get(dx)
            if xp is None:
                xp = x_pow[dx] = x_val**dx
            zp = z_pow.get(dz)
            if zp is None:
                zp = z_pow[dz] = z_val**dz
            total += coeff * xp * zp
        return total

    def diagonal(self) -> BiPoly:
        """Substitute z = x: every term (i, j) collapses to degree i + j in x."""
        out: dict[MonomialKey, Rational] = {}
        for (dx, dz), coeff in self._terms.items():
            key = (dx + dz, 0)
            total = out.get(key, _ZERO) + coeff
            if total:
                out[key] = total
            elif key in out:
                del out[key]
        return _from_canonical(out)

    # -- comparison and display -------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BiPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self._terms == BiPoly.constant(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if not self._terms:
                self._hash = hash(_ZERO)
            elif len(self._terms) == 1 and (0, 0) in self._terms:
                # Constants hash like their scalar value, consistent with __eq__.
                self._hash = hash(self._terms[(0, 0)])
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for dx, dz, coeff in self.terms():
            sign = "-" if coeff < 0 else "+"
            magnitude = -coeff if coeff < 0 else coeff
            factors: list[str] = []
            if magnitude != 1 or (dx == 0 and dz == 0):
                factors.append(str(magnitude))
            if dx:
                factors.append("x" if dx == 1 else f"x^{dx}")
            if dz:
                factors.append("z" if dz == 1 else f"z^{dz}")
            body = " ".join(factors)
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"BiPoly({str(self)!r})"


def _from_canonical(terms: dict[MonomialKey, Rational]) -> BiPoly:
    """Wrap a dict that is already zero-free without re-normalizing."""
    poly = BiPoly.__new__(BiPoly)
    poly._terms = terms
    poly._sorted = None
    poly._hash = None
    return poly


_ZERO = Rational(0)

X = BiPoly.monomial(1, 0)
Z = BiPoly.monomial(0, 1)
