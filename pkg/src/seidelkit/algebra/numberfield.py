"""Arithmetic in Q(alpha) for a real algebraic alpha of any degree.

Used when a largest eigenvalue is neither rational nor quadratic.  Elements
are residues modulo the defining polynomial of alpha; signs are decided
exactly through the isolating interval.  The defining polynomial need not be
irreducible: whenever an inversion meets a nontrivial common factor the field
narrows to the factor that still vanishes at alpha (dynamic evaluation).
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC

from .poly import RealAlgebraic, pdivmod, pgcd, pmonic, pmul, psub, ptrim, padd

__all__ = ["AlgebraicField", "AlgebraicElement"]


def _xgcd_inverse(f: list, m: list) -> list:
    """Inverse of f modulo m, assuming gcd(f, m) = 1 over Q."""
    r0, r1 = ptrim(m), ptrim(f)
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, psub(s0, pmul(q, s1))
    if not r1:
        raise ZeroDivisionError("not invertible")
    c = r1[0]
    inv = [a / c for a in s1]
    return pdivmod(inv, m)[1]


class AlgebraicField:
    """Q(alpha) with alpha given as a :class:`RealAlgebraic`."""

    def __init__(self, root: RealAlgebraic):
        self.root = root.copy()

    @property
    def modulus(self) -> list:
        return self.root.poly

    def reduce(self, coeffs) -> list:
        c = ptrim([Fraction(a) if isinstance(a, int) else a for a in coeffs])
        if len(c) >= len(self.modulus):
            c = pdivmod(c, self.modulus)[1]
        return c

    def sign(self, coeffs) -> int:
        return self.root.sign_of(coeffs)

    def inverse(self, coeffs) -> list:
        f = self.reduce(coeffs)
        if not f:
            raise ZeroDivisionError("division by zero")
        g = pgcd(self.modulus, f)
        if len(g) > 1:
            if self.root.sign_of(g) == 0:
                raise ZeroDivisionError("division by zero")
            self.root.poly = pmonic(pdivmod(self.modulus, g)[0])
            f = self.reduce(f)
        return _xgcd_inverse(f, self.modulus)

    def generator(self) -> "AlgebraicElement":
        return AlgebraicElement(self, [Fraction(0), Fraction(1)])

    def __call__(self, value) -> "AlgebraicElement":
        if isinstance(value, AlgebraicElement):
            return value
        return AlgebraicElement(self, [Fraction(value)])


class AlgebraicElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: AlgebraicField, coeffs):
        self.field = field
        self.coeffs = field.reduce(coeffs)

    def _lift(self, other):
        if isinstance(other, AlgebraicElement):
            if other.field is not self.field:
                raise ValueError("elements of different algebraic fields")
            return other.coeffs
        if isinstance(other, (int, _RationalABC)):
            return [Fraction(other)] if other != 0 else []
        raise TypeError

    def __add__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return AlgebraicElement(self.field, padd(self.coeffs, o))

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return AlgebraicElement(self.field, psub(self.coeffs, o))

    def __rsub__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return AlgebraicElement(self.field, psub(o, self.coeffs))

    def __neg__(self):
        return AlgebraicElement(self.field, [-a for a in self.coeffs])

    def __mul__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return AlgebraicElement(self.field, pmul(self.coeffs, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return AlgebraicElement(self.field, pmul(self.coeffs, self.field.inverse(o)))

    def __rtruediv__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return AlgebraicElement(self.field, pmul(o, self.field.inverse(self.coeffs)))

    def sign(self) -> int:
        return self.field.sign(self.coeffs)

    def _cmp(self, other) -> int:
        return (self - other).sign()

    def __eq__(self, other):
        try:
            return self._cmp(other) == 0
        except (TypeError, ValueError):
            return NotImplemented

    __hash__ = None

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __bool__(self):
        return self.sign() != 0

    def __float__(self):
        a = float(self.field.root)
        return float(sum(float(c) * a**i for i, c in enumerate(self.coeffs)))

    def __repr__(self):
        return f"AlgebraicElement({[str(c) for c in self.coeffs]} at ~{float(self):.6g})"
