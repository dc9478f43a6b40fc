"""Univariate polynomials over Z and Q, Sturm sequences and real-root isolation.

Coefficient lists are stored lowest degree first.  Helper functions prefixed
``p`` work on plain lists over any exact field (Fraction, QuadraticNumber, ...);
:class:`IntPoly` is the immutable integer polynomial used for characteristic
polynomials.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

__all__ = [
    "IntPoly",
    "NoRealRoot",
    "LargestRoot",
    "RealAlgebraic",
    "largest_root",
    "isolate_real_roots",
    "sturm_chain",
    "count_roots",
    "squarefree_part",
    "yun_decomposition",
    "root_multiplicity",
    "low_degree_minimal_poly",
]


class NoRealRoot(ValueError):
    pass


# ---------------------------------------------------------------------------
# list-level helpers


def ptrim(c: Sequence) -> list:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def padd(p, q) -> list:
    n = max(len(p), len(q))
    return ptrim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def psub(p, q) -> list:
    n = max(len(p), len(q))
    return ptrim([(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n)])


def pmul(p, q) -> list:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return ptrim(out)


def pscale(p, c) -> list:
    return ptrim([a * c for a in p])


def pdivmod(p, q) -> tuple[list, list]:
    """Long division over a field; q must be nonzero."""
    q = ptrim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(a) if isinstance(a, int) else a for a in ptrim(p)]
    lead = q[-1]
    if len(r) < len(q):
        return [], r
    quo = [0] * (len(r) - len(q) + 1)
    for k in range(len(r) - len(q), -1, -1):
        c = r[k + len(q) - 1] / lead
        quo[k] = c
        if c != 0:
            for j, b in enumerate(q):
                r[k + j] -= c * b
    return ptrim(quo), ptrim(r[: len(q) - 1])


def pmonic(p) -> list:
    p = ptrim(p)
    if not p:
        return []
    lead = p[-1]
    if isinstance(lead, int):
        lead = Fraction(lead)
    return [a / lead for a in p]


def pgcd(p, q) -> list:
    """Monic gcd over Q (or any exact field)."""
    a, b = ptrim(p), ptrim(q)
    while b:
        a, b = b, pdivmod(a, b)[1]
    return pmonic(a)


def pderiv(p) -> list:
    return ptrim([i * p[i] for i in range(1, len(p))])


def peval(p, x):
    acc = 0
    for a in reversed(p):
        acc = acc * x + a
    return acc


def psign_at(p, x) -> int:
    v = peval(p, x)
    return (v > 0) - (v < 0)


def squarefree_part(p) -> list:
    """Monic square-free part p / gcd(p, p')."""
    p = ptrim(p)
    if len(p) <= 1:
        return pmonic(p)
    g = pgcd(p, pderiv(p))
    return pmonic(pdivmod(p, g)[0])


def yun_decomposition(p) -> list[list]:
    """Monic square-free factors a_1, a_2, ... with p = c * prod a_i**i."""
    p = pmonic(p)
    if len(p) <= 1:
        return []
    out = []
    dp = pderiv(p)
    a0 = pgcd(p, dp)
    b = pdivmod(p, a0)[0]
    c = pdivmod(dp, a0)[0]
    d = psub(c, pderiv(b))
    while len(b) > 1:
        a = pgcd(b, d)
        out.append(a)
        b = pdivmod(b, a)[0]
        c = pdivmod(d, a)[0]
        d = psub(c, pderiv(b))
    while out and len(out[-1]) <= 1:
        out.pop()
    return out


# ---------------------------------------------------------------------------
# integer polynomials


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial; ``coeffs[i]`` multiplies x**i."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        for a in c:
            if isinstance(a, Fraction):
                if a.denominator != 1:
                    raise ValueError("IntPoly needs integer coefficients")
            elif not isinstance(a, int):
                raise TypeError("IntPoly needs integer coefficients")
        c = [int(a) for a in ptrim(c)]
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def const(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def from_roots(cls, *roots: int) -> "IntPoly":
        p = cls((1,))
        for r in roots:
            p = p * cls((-r, 1))
        return p

    @classmethod
    def from_fractions(cls, c: Sequence) -> "IntPoly":
        return cls(tuple(Fraction(a) for a in c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return self.leading == 1

    def __call__(self, x):
        return peval(self.coeffs, x)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        return IntPoly(tuple(padd(self.coeffs, other.coeffs)))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return IntPoly(tuple(psub(self.coeffs, other.coeffs)))

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(tuple(pscale(self.coeffs, other)))
        return IntPoly(tuple(pmul(self.coeffs, other.coeffs)))

    def __pow__(self, k: int) -> "IntPoly":
        out = IntPoly((1,))
        for _ in range(k):
            out = out * self
        return out

    def exact_divmod(self, other: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Division over Q; raises if the quotient or remainder is not integral."""
        q, r = pdivmod(self.coeffs, other.coeffs)
        return IntPoly.from_fractions(q), IntPoly.from_fractions(r)

    def divides(self, other: "IntPoly") -> bool:
        return not pdivmod(other.coeffs, self.coeffs)[1]

    def derivative(self) -> "IntPoly":
        return IntPoly(tuple(pderiv(self.coeffs)))

    def mod(self, m: int) -> tuple[int, ...]:
        return tuple(ptrim([a % m for a in self.coeffs]))

    def as_fractions(self) -> list[Fraction]:
        return [Fraction(a) for a in self.coeffs]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            a = self.coeffs[i]
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if i == 0:
                body = str(mag)
            else:
                var = "x" if i == 1 else f"x^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


# ---------------------------------------------------------------------------
# Sturm sequences


def sturm_chain(p) -> list[list]:
    p = ptrim([Fraction(a) for a in p])
    chain = [p, pderiv(p)]
    while chain[-1]:
        r = pdivmod(chain[-2], chain[-1])[1]
        if not r:
            break
        chain.append([-a for a in r])
    return [c for c in chain if c]


def _variations(signs) -> int:
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _sign_at(p, x) -> int:
    """Sign of p at x; x = None means +infinity, '-inf' handled by caller."""
    if x is None:
        return (p[-1] > 0) - (p[-1] < 0)
    return psign_at(p, x)


def _sign_at_neg_inf(p) -> int:
    s = (p[-1] > 0) - (p[-1] < 0)
    return s if (len(p) - 1) % 2 == 0 else -s


def variations_at(chain, x, neg_inf: bool = False) -> int:
    if neg_inf:
        return _variations([_sign_at_neg_inf(p) for p in chain])
    return _variations([_sign_at(p, x) for p in chain])


def count_roots(chain, lo=None, hi=None) -> int:
    """Distinct real roots in (lo, hi]; lo None = -inf, hi None = +inf."""
    vlo = variations_at(chain, None, neg_inf=True) if lo is None else variations_at(chain, lo)
    vhi = variations_at(chain, None) if hi is None else variations_at(chain, hi)
    return vlo - vhi


def cauchy_bound(p) -> int:
    p = ptrim(p)
    lead = abs(Fraction(p[-1]))
    return 1 + math.ceil(max((abs(Fraction(a)) / lead for a in p[:-1]), default=Fraction(0)))


# ---------------------------------------------------------------------------
# isolated real roots


class RealAlgebraic:
    """A real root of a square-free rational polynomial, held by an isolating interval.

    ``poly`` has exactly one root in the open interval (lo, hi) and does not
    vanish at either end.  Rational roots are flagged by ``exact``.
    """

    __slots__ = ("poly", "lo", "hi", "exact")

    def __init__(self, poly, lo, hi, exact: Optional[Fraction] = None):
        self.poly = pmonic([Fraction(a) for a in poly])
        self.lo = Fraction(lo)
        self.hi = Fraction(hi)
        self.exact = exact

    def copy(self) -> "RealAlgebraic":
        return RealAlgebraic(self.poly, self.lo, self.hi, self.exact)

    def refine(self, width: Fraction) -> None:
        """Bisect until hi - lo <= width."""
        if self.exact is not None:
            while self.hi - self.lo > width:
                half = (self.hi - self.lo) / 4
                self.lo, self.hi = self.exact - half, self.exact + half
            return
        slo = psign_at(self.poly, self.lo)
        while self.hi - self.lo > width:
            mid = (self.lo + self.hi) / 2
            sm = psign_at(self.poly, mid)
            if sm == 0:
                self.exact = mid
                half = (self.hi - self.lo) / 4
                self.lo, self.hi = mid - half, mid + half
                continue
            if sm == slo:
                self.lo = mid
            else:
                self.hi = mid

    def sign_of(self, f) -> int:
        """Exact sign of f(alpha) for a rational polynomial f."""
        f = ptrim([Fraction(a) for a in f])
        if not f:
            return 0
        if self.exact is not None:
            return psign_at(f, self.exact)
        g = pgcd(self.poly, f)
        if len(g) > 1 and psign_at(g, self.lo) * psign_at(g, self.hi) < 0:
            return 0
        chain = sturm_chain(squarefree_part(f))
        while count_roots(chain, self.lo, self.hi) or psign_at(f, self.hi) == 0:
            self.refine((self.hi - self.lo) / 2)
            if self.exact is not None:
                return psign_at(f, self.exact)
        return psign_at(f, self.hi)

    def compare(self, other) -> int:
        """-1, 0, +1 comparing self with another RealAlgebraic or a rational."""
        if not isinstance(other, RealAlgebraic):
            q = Fraction(other)
            # sign(alpha - q)
            return self.sign_of([-q, 1])
        if self.exact is not None and other.exact is not None:
            return (self.exact > other.exact) - (self.exact < other.exact)
        if self.exact is not None:
            return -other.compare(self.exact)
        if other.exact is not None:
            return self.compare(other.exact)
        a, b = self.copy(), other.copy()
        g = pgcd(a.poly, b.poly)
        while True:
            if a.hi <= b.lo:
                return -1
            if b.hi <= a.lo:
                return 1
            lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
            # g is square-free and nonzero at every endpoint, so a sign change
            # on the overlap pins the one root shared by both intervals
            if len(g) > 1 and psign_at(g, lo) * psign_at(g, hi) < 0:
                return 0
            a.refine((a.hi - a.lo) / 2)
            b.refine((b.hi - b.lo) / 2)
            if a.exact is not None or b.exact is not None:
                return a.compare(b)

    def __float__(self) -> float:
        if self.exact is not None:
            return float(self.exact)
        r = self.copy()
        r.refine(Fraction(1, 2**60))
        return float((r.lo + r.hi) / 2)

    def __repr__(self) -> str:
        return f"RealAlgebraic(root of {self.poly} in ({self.lo}, {self.hi}))"


def isolate_real_roots(p) -> list[RealAlgebraic]:
    """All distinct real roots of p, ascending, each with an isolating interval."""
    sqf = squarefree_part([Fraction(a) for a in p])
    if len(sqf) <= 1:
        return []
    chain = sturm_chain(sqf)
    bound = cauchy_bound(sqf)
    out: list[RealAlgebraic] = []

    def split(lo: Fraction, hi: Fraction, k: int) -> None:
        # k roots in (lo, hi]; sqf(hi) != 0 guaranteed by callers
        if k == 0:
            return
        if k == 1:
            out.append(RealAlgebraic(sqf, lo, hi))
            return
        mid = (lo + hi) / 2
        if psign_at(sqf, mid) == 0:
            eps = (hi - lo) / 4
            while count_roots(chain, mid - eps, mid + eps) != 1 or 0 in (
                psign_at(sqf, mid - eps),
                psign_at(sqf, mid + eps),
            ):
                eps /= 2
            left = count_roots(chain, lo, mid - eps)
            split(lo, mid - eps, left)
            out.append(RealAlgebraic(sqf, mid - eps, mid + eps, exact=mid))
            split(mid + eps, hi, k - left - 1)
            return
        left = count_roots(chain, lo, mid)
        split(lo, mid, left)
        split(mid, hi, k - left)

    lo, hi = Fraction(-bound), Fraction(bound)
    split(lo, hi, count_roots(chain, lo, hi))
    return out


@dataclass(frozen=True)
class LargestRoot:
    """Largest real root: open isolating interval, multiplicity, and when the
    root is rational or quadratic its minimal polynomial."""

    lo: Fraction
    hi: Fraction
    multiplicity: int
    minimal_poly: Optional[IntPoly]
    algebraic: RealAlgebraic

    @property
    def degree(self) -> Optional[int]:
        return None if self.minimal_poly is None else self.minimal_poly.degree


def _largest_isolated(p) -> RealAlgebraic:
    sqf = squarefree_part([Fraction(a) for a in p])
    if len(sqf) <= 1:
        raise NoRealRoot("constant polynomial")
    chain = sturm_chain(sqf)
    if count_roots(chain) == 0:
        raise NoRealRoot("polynomial has no real root")
    bound = cauchy_bound(sqf)
    # largest integer k with a root in (k, +inf)
    lo, hi = -bound, bound
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if count_roots(chain, mid, None) >= 1:
            lo = mid
        else:
            hi = mid
    # largest root in (a, b]; shrink by Sturm counts until it is alone there
    # and neither end is a root (a smaller rational root may sit at a)
    a, b = Fraction(lo), Fraction(lo + 1)
    while psign_at(sqf, b) != 0 and (count_roots(chain, a, b) != 1 or psign_at(sqf, a) == 0):
        mid = (a + b) / 2
        if count_roots(chain, mid, b) >= 1:
            a = mid
        else:
            b = mid
    top = b
    if psign_at(sqf, top) == 0:
        eps = Fraction(1, 8)
        while count_roots(chain, top - eps, top + eps) != 1 or 0 in (
            psign_at(sqf, top - eps),
            psign_at(sqf, top + eps),
        ):
            eps /= 2
        return RealAlgebraic(sqf, top - eps, top + eps, exact=top)
    r = RealAlgebraic(sqf, a, top)
    while count_roots(chain, r.lo, r.hi) != 1:
        r.refine((r.hi - r.lo) / 2)
    r.refine(Fraction(1, 4))
    # a rational root hit during bisection keeps a symmetric interval; shrink
    # it until it isolates
    if r.exact is not None:
        while count_roots(chain, r.lo, r.hi) != 1 or 0 in (psign_at(sqf, r.lo), psign_at(sqf, r.hi)):
            r.refine((r.hi - r.lo) / 2)
    return r


def low_degree_minimal_poly(p, root: RealAlgebraic) -> Optional[IntPoly]:
    """Minimal polynomial of ``root`` when it has degree 1 or 2, else None.

    ``p`` must be a monic integer polynomial (so its roots are algebraic
    integers and their minimal polynomials are monic over Z).
    """
    if root.exact is not None:
        q = root.exact
        if q.denominator == 1:
            return IntPoly((-q.numerator, 1))
        return IntPoly((-q.numerator, q.denominator))
    lo, hi = math.ceil(root.lo), math.floor(root.hi)
    for k in range(lo, hi + 1):
        if peval(p, k) == 0 and root.lo < k < root.hi:
            return IntPoly((-k, 1))
    others = [r for r in isolate_real_roots(p) if r.lo != root.lo or r.hi != root.hi]
    a = root.copy()
    a.refine(Fraction(1, 2**48))
    for b in others:
        if b.exact is not None:
            continue
        b = b.copy()
        b.refine(Fraction(1, 2**48))
        s_lo, s_hi = a.lo + b.lo, a.hi + b.hi
        prods = [a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi]
        m_lo, m_hi = min(prods), max(prods)
        s_cands = range(math.ceil(s_lo), math.floor(s_hi) + 1)
        m_cands = range(math.ceil(m_lo), math.floor(m_hi) + 1)
        for s in s_cands:
            for m in m_cands:
                q = IntPoly((m, -s, 1))
                disc = s * s - 4 * m
                if disc <= 0 or math.isqrt(disc) ** 2 == disc:
                    continue
                if q.divides(IntPoly(tuple(int(c) for c in p))) and (
                    psign_at(q.coeffs, root.lo) * psign_at(q.coeffs, root.hi) < 0
                ):
                    return q
    return None


def root_multiplicity(p, root: RealAlgebraic, minimal: Optional[IntPoly] = None) -> int:
    """Multiplicity of ``root`` in p (0 when it is not a root)."""
    p = ptrim([Fraction(a) for a in p])
    if minimal is not None:
        m = [Fraction(a) for a in minimal.coeffs]
        k = 0
        while True:
            q, r = pdivmod(p, m)
            if r:
                return k
            p, k = q, k + 1
    for i, a in enumerate(yun_decomposition(p), start=1):
        if len(a) > 1 and root.sign_of(a) == 0:
            return i
    return 0


def largest_root(p) -> LargestRoot:
    """Isolate the largest real root of p with its multiplicity.

    The returned open interval has width at most 1/4 and contains no other
    real root.  Raises NoRealRoot when p has no real root.
    """
    coeffs = p.coeffs if isinstance(p, IntPoly) else tuple(p)
    r = _largest_isolated(coeffs)
    minimal = None
    if all(Fraction(a).denominator == 1 for a in coeffs) and Fraction(coeffs[-1]) == 1:
        minimal = low_degree_minimal_poly([int(a) for a in coeffs], r)
    elif r.exact is not None:
        minimal = low_degree_minimal_poly(coeffs, r)
    mult = root_multiplicity(coeffs, r, minimal)
    return LargestRoot(r.lo, r.hi, mult, minimal, r)
