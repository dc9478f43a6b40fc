"""Exact elements a + b*sqrt(d) of a real quadratic field."""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational as _RationalABC

__all__ = ["QuadraticNumber", "field_sign", "sqrt_rational", "squarefree_decompose"]


def squarefree_decompose(d: int) -> tuple[int, int]:
    """Return (f, e) with d == f*f*e and e square-free."""
    if d < 0:
        raise ValueError("negative radicand")
    if d == 0:
        return 0, 0
    f, e, p = 1, 1, 2
    while p * p <= d:
        while d % (p * p) == 0:
            d //= p * p
            f *= p
        if d % p == 0:
            d //= p
            e *= p
        p += 1 if p == 2 else 2
    return f, e * d


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    raise TypeError(f"expected a rational, got {type(x).__name__}")


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


class QuadraticNumber:
    """Canonical a + b*sqrt(d) with rational a, b and square-free d.

    A value with b == 0 always carries d == 0, so equality is componentwise.
    Mixing two different irrational fields raises ValueError.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d: int = 0):
        a = _as_fraction(a)
        b = _as_fraction(b)
        d = int(d)
        if d < 0:
            raise ValueError("d must be nonnegative")
        f, e = squarefree_decompose(d)
        if e == 1:
            a, b, e = a + b * f, Fraction(0), 0
        elif e == 0:
            b = Fraction(0)
        else:
            b = b * f
        if b == 0:
            e = 0
        self.a, self.b, self.d = a, b, e

    # -- construction -------------------------------------------------------

    @classmethod
    def coerce(cls, x) -> "QuadraticNumber":
        if isinstance(x, QuadraticNumber):
            return x
        return cls(_as_fraction(x))

    @classmethod
    def parse(cls, text: str) -> "QuadraticNumber":
        """Parse '3', '-7/4', 'sqrt(5)', '1+2*sqrt(3)', '(-3+sqrt(65))/2'."""
        s = text.replace(" ", "")
        denom = Fraction(1)
        m = re.fullmatch(r"\((.*)\)/(\d+(?:/\d+)?)", s)
        if m:
            s, denom = m.group(1), Fraction(m.group(2))
        m = re.fullmatch(
            r"([+-]?\d+(?:/\d+)?)?(?:([+-])?(\d+(?:/\d+)?)?\*?sqrt\((\d+)\))?", s
        )
        if not s or m is None or (m.group(1) is None and m.group(4) is None):
            raise ValueError(f"cannot parse quadratic number {text!r}")
        a = Fraction(m.group(1)) if m.group(1) else Fraction(0)
        b = Fraction(0)
        d = 0
        if m.group(4) is not None:
            b = Fraction(m.group(3)) if m.group(3) else Fraction(1)
            if m.group(2) == "-":
                b = -b
            elif m.group(2) is None and m.group(1) is not None:
                raise ValueError(f"cannot parse quadratic number {text!r}")
            d = int(m.group(4))
        return cls(a / denom, b / denom, d)

    # -- structure ----------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def conjugate(self) -> "QuadraticNumber":
        return QuadraticNumber(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.d

    def _field(self, other: "QuadraticNumber") -> int:
        if self.d and other.d and self.d != other.d:
            raise ValueError(f"mixed quadratic fields Q(sqrt({self.d})) and Q(sqrt({other.d}))")
        return self.d or other.d

    def sign(self) -> int:
        sa, sb = _sgn(self.a), _sgn(self.b)
        if sb == 0:
            return sa
        if sa == 0:
            return sb
        if sa == sb:
            return sa
        # opposite signs: compare a^2 with b^2 d
        return sa * _sgn(self.a * self.a - self.b * self.b * self.d)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        try:
            o = QuadraticNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return QuadraticNumber(self.a + o.a, self.b + o.b, self._field(o))

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            o = QuadraticNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return QuadraticNumber(self.a - o.a, self.b - o.b, self._field(o))

    def __rsub__(self, other):
        try:
            o = QuadraticNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        try:
            o = QuadraticNumber.coerce(other)
        except TypeError:
            return NotImplemented
        d = self._field(o)
        return QuadraticNumber(
            self.a * o.a + self.b * o.b * d, self.a * o.b + self.b * o.a, d
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = QuadraticNumber.coerce(other)
        except TypeError:
            return NotImplemented
        if o.b == 0:
            if o.a == 0:
                raise ZeroDivisionError("division by zero")
            return QuadraticNumber(self.a / o.a, self.b / o.a, self.d)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero")
        return self * QuadraticNumber(o.a / n, -o.b / n, o.d)

    def __rtruediv__(self, other):
        try:
            o = QuadraticNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = QuadraticNumber(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- comparison ---------------------------------------------------------

    def _cmp(self, other) -> int:
        return (self - other).sign()

    def __eq__(self, other):
        if isinstance(other, QuadraticNumber):
            return self.a == other.a and self.b == other.b and self.d == other.d
        if isinstance(other, (int, _RationalABC)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __lt__(self, other):
        try:
            return self._cmp(other) < 0
        except TypeError:
            return NotImplemented

    def __le__(self, other):
        try:
            return self._cmp(other) <= 0
        except TypeError:
            return NotImplemented

    def __gt__(self, other):
        try:
            return self._cmp(other) > 0
        except TypeError:
            return NotImplemented

    def __ge__(self, other):
        try:
            return self._cmp(other) >= 0
        except TypeError:
            return NotImplemented

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __float__(self):
        return float(self.a) + float(self.b) * self.d ** 0.5

    # -- display ------------------------------------------------------------

    def exact_str(self) -> str:
        if self.b == 0:
            return str(self.a)
        return f"({self.a} + {self.b}*sqrt({self.d}))"

    def __str__(self):
        return self.exact_str()

    def __repr__(self):
        return f"QuadraticNumber({self.a!s}, {self.b!s}, {self.d})"

    def __reduce__(self):
        return (QuadraticNumber, (self.a, self.b, self.d))


def field_sign(x) -> int:
    """Exact sign (-1, 0, +1) of a rational or quadratic value."""
    if isinstance(x, QuadraticNumber):
        return x.sign()
    if hasattr(x, "sign") and callable(x.sign):
        return x.sign()
    return _sgn(x)


def sqrt_rational(q) -> QuadraticNumber:
    """sqrt(q) for a nonnegative rational q, as a canonical quadratic number."""
    q = _as_fraction(q)
    if q < 0:
        raise ValueError("negative argument")
    # sqrt(p/r) = sqrt(p*r)/r
    return QuadraticNumber(0, Fraction(1, q.denominator), q.numerator * q.denominator)
