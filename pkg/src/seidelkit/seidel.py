"""Seidel matrices, exact spectra, bordered matrices B_theta^(t) and p(G)."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .algebra import (
    AlgebraicField,
    FieldSymMatrix,
    IntPoly,
    LargestRoot,
    QuadraticNumber,
    char_poly,
    field_nullspace,
    field_rank,
    field_solve,
    largest_root,
    psd_status,
    sqrt_rational,
    squarefree_part,
)
from .algebra.poly import pdivmod, pmul
from .graphs import Graph
from .report import CheckReport

__all__ = [
    "SeidelMatrix",
    "SpectrumSummary",
    "TwoEigenvalueParams",
    "SrgParams",
    "Ordering",
    "NoSpectrum",
    "ThetaTooSmall",
    "WrongTheta",
    "NotLargestEigenvalue",
    "PreconditionViolated",
    "seidel_of",
    "seidel_spectrum",
    "compare_largest",
    "rank_at",
    "b_matrix",
    "p_value",
    "switching_root_check",
    "two_eigenvalue_params",
    "srg_params",
    "lines_gram",
    "parity_check",
    "cone_equivalence_check",
    "extension_spectrum_check",
    "bordered_psd_check",
    "root_value",
]


class NoSpectrum(ValueError):
    pass


class ThetaTooSmall(ValueError):
    pass


class WrongTheta(ValueError):
    pass


class NotLargestEigenvalue(ValueError):
    pass


class PreconditionViolated(ValueError):
    pass


class SeidelMatrix:
    """Symmetric matrix with zero diagonal and +-1 off the diagonal."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        n = len(rows)
        for i, r in enumerate(rows):
            if len(r) != n or r[i] != 0:
                raise ValueError("Seidel matrix must be square with zero diagonal")
            for j in range(i + 1, n):
                if r[j] not in (1, -1) or rows[j][i] != r[j]:
                    raise ValueError("off-diagonal entries must be symmetric +-1")
        self._rows = rows

    @property
    def order(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple:
        return self._rows

    def __getitem__(self, ij):
        return self._rows[ij[0]][ij[1]]

    def __eq__(self, other):
        return isinstance(other, SeidelMatrix) and self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"SeidelMatrix(order={self.order}, signs={self.sign_string()!r})"

    def graph(self) -> Graph:
        """The graph with S = J - I - 2A (entry -1 <-> edge)."""
        return Graph.from_matrix([[1 if x == -1 else 0 for x in r] for r in self._rows])

    def bordered(self, s: Sequence[int]) -> "SeidelMatrix":
        """[[S, s], [s^T, 0]]."""
        n = self.order
        if len(s) != n:
            raise ValueError("sign vector length must equal the order")
        rows = [list(r) + [s[i]] for i, r in enumerate(self._rows)]
        rows.append(list(s) + [0])
        return SeidelMatrix(rows)

    def principal(self, idx: Sequence[int]) -> "SeidelMatrix":
        return SeidelMatrix([[self._rows[i][j] for j in idx] for i in idx])

    def conjugate(self, signs: Sequence[int]) -> "SeidelMatrix":
        """D S D for the diagonal +-1 matrix D = diag(signs)."""
        return SeidelMatrix([[signs[i] * x * signs[j] for j, x in enumerate(r)] for i, r in enumerate(self._rows)])

    def sign_string(self) -> str:
        n = self.order
        return "".join("+" if self._rows[i][j] == 1 else "-" for i in range(n) for j in range(i + 1, n))

    @classmethod
    def from_sign_string(cls, order: int, signs: str) -> "SeidelMatrix":
        if len(signs) != order * (order - 1) // 2 or set(signs) - {"+", "-"}:
            raise ValueError("sign string must list the upper triangle row by row with + and -")
        rows = [[0] * order for _ in range(order)]
        it = iter(signs)
        for i in range(order):
            for j in range(i + 1, order):
                v = 1 if next(it) == "+" else -1
                rows[i][j] = rows[j][i] = v
        return cls(rows)

    def to_json(self) -> dict:
        return {"order": self.order, "signs": self.sign_string()}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data) -> "SeidelMatrix":
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_sign_string(int(data["order"]), data["signs"])

    def to_graph6(self) -> str:
        return self.graph().to_graph6()

    @classmethod
    def from_graph6(cls, text: str) -> "SeidelMatrix":
        return seidel_of(Graph.from_graph6(text))


def seidel_of(g: Graph) -> SeidelMatrix:
    a = g.adjacency_matrix()
    n = g.order
    return SeidelMatrix([[0 if i == j else (-1 if a[i][j] else 1) for j in range(n)] for i in range(n)])


def _as_seidel(x) -> SeidelMatrix:
    return seidel_of(x) if isinstance(x, Graph) else x


# ---------------------------------------------------------------------------
# spectra


def quadratic_root_in(minimal: IntPoly, lo: Fraction, hi: Fraction) -> QuadraticNumber:
    """The root of a monic irreducible quadratic lying in (lo, hi)."""
    _, b, _one = minimal.coeffs
    c = minimal.coeffs[0]
    disc = Fraction(b * b - 4 * c)
    for sgn in (1, -1):
        r = (QuadraticNumber(-b) + sgn * sqrt_rational(disc)) / 2
        if lo < r < hi:
            return r
    raise ValueError("no root of the quadratic in the interval")


def root_value(root: LargestRoot):
    """Exact field value of an isolated root: Fraction, QuadraticNumber, or
    an AlgebraicElement generating Q(root)."""
    m = root.minimal_poly
    if m is not None and m.degree == 1:
        return Fraction(-m.coeffs[0], m.coeffs[1])
    if m is not None and m.degree == 2 and m.leading == 1:
        return quadratic_root_in(m, root.lo, root.hi)
    return AlgebraicField(root.algebraic).generator()


@dataclass(frozen=True)
class SpectrumSummary:
    charpoly: IntPoly
    largest: LargestRoot
    value: object
    largest_multiplicity: int

    @property
    def order(self) -> int:
        return self.charpoly.degree


def seidel_spectrum(s) -> SpectrumSummary:
    s = _as_seidel(s)
    if s.order == 0:
        raise NoSpectrum("order-0 Seidel matrix has no spectrum")
    cp = char_poly(s.rows)
    lr = largest_root(cp)
    return SpectrumSummary(cp, lr, root_value(lr), lr.multiplicity)


class Ordering(enum.Enum):
    LESS = "Less"
    EQUAL = "Equal"
    GREATER = "Greater"


def _shift(s: SeidelMatrix, t) -> FieldSymMatrix:
    return FieldSymMatrix.shifted(s.rows, t)


def compare_largest(s, t) -> Ordering:
    """Compare the largest eigenvalue of S with t through PSD-ness of tI - S."""
    s = _as_seidel(s)
    cert = psd_status(_shift(s, t))
    if not cert.psd:
        return Ordering.GREATER
    return Ordering.LESS if cert.rank == s.order else Ordering.EQUAL


def rank_at(s, t) -> int:
    """rank(tI - S)."""
    s = _as_seidel(s)
    return field_rank(_shift(s, t))


# ---------------------------------------------------------------------------
# bordered matrices and p(G)


def _a_plus(g: Graph, theta) -> list[list]:
    a = g.adjacency_matrix()
    n = g.order
    return [[(theta if i == j else 0) + a[i][j] for j in range(n)] for i in range(n)]


def b_matrix(g: Graph, theta, t) -> FieldSymMatrix:
    """[[A(G) + theta I, j], [j^T, t]]."""
    rows = [r + [1] for r in _a_plus(g, theta)]
    rows.append([1] * g.order + [t])
    return FieldSymMatrix(rows)


def p_value(g: Graph, theta):
    """min{t : B_theta^(t)(G) is PSD} = (x, j) with (A + theta I) x = j.

    Returns None when j is outside the column space (no t works).
    """
    m = FieldSymMatrix(_a_plus(g, theta))
    if not psd_status(m).psd:
        raise ThetaTooSmall(f"A(G) + {theta} I is not positive semidefinite")
    x = field_solve(m, [1] * g.order)
    if x is None:
        return None
    return sum(x, Fraction(0))


def bordered_psd_check(g: Graph, theta) -> CheckReport:
    """largest Seidel eigenvalue <= 2 theta - 1  <=>  B_theta(G) PSD, with the
    rank identity rank((2theta-1)I - S) + 1 = rank B_theta(G), least adjacency
    eigenvalue >= -theta, and p(G) <= 2 whenever they hold."""
    s = seidel_of(g)
    lam = 2 * theta - 1
    side1 = compare_largest(s, lam) != Ordering.GREATER
    b = b_matrix(g, theta, 2)
    cert = psd_status(b)
    data = {"lambda_le": side1, "B_psd": cert.psd}
    ok = side1 == cert.psd
    if ok and side1:
        r_s = rank_at(s, lam)
        data.update(rank_shift=r_s, rank_B=cert.rank)
        a_psd = psd_status(FieldSymMatrix(_a_plus(g, theta))).psd
        p = p_value(g, theta)
        data.update(A_plus_theta_psd=a_psd, p=p)
        ok = r_s + 1 == cert.rank and a_psd and p is not None and p <= 2
    return CheckReport("bordered_psd", ok, "holds" if ok else "violated", data)


# ---------------------------------------------------------------------------
# switching roots


def switching_root_check(g: Graph, theta) -> CheckReport:
    """Gram-level switching-root identities for a main eigenvector of 2theta-1."""
    s = seidel_of(g)
    lam = 2 * theta - 1
    if compare_largest(s, lam) != Ordering.EQUAL:
        raise WrongTheta(f"2*theta - 1 = {lam} is not the largest Seidel eigenvalue")
    n = g.order
    basis = field_nullspace(_shift(s, lam))
    v = next((b for b in basis if sum(b, Fraction(0)) != 0), None)
    rank_a = field_rank(_a_plus(g, theta))
    rank_b = field_rank(b_matrix(g, theta, 2))
    data = {"eigenspace_dim": len(basis), "rank_A_theta": rank_a, "rank_B": rank_b}
    if v is None:
        return CheckReport("switching_root", True, "NoMainEigenvector", data)
    vj = sum(v, Fraction(0))
    ap = _a_plus(g, theta)
    av = [sum((ap[i][k] * v[k] for k in range(n)), Fraction(0)) for i in range(n)]
    rr = 4 * sum((v[i] * av[i] for i in range(n)), Fraction(0)) / (vj * vj)
    ra = [2 * av[i] / vj for i in range(n)]
    data.update(r_norm=rr, r_dot_alpha=sorted(set(ra), key=float))
    ok = rr == 2 and all(x == 1 for x in ra) and rank_a == rank_b
    return CheckReport("switching_root", ok, "SwitchingRoot" if ok else "IdentityFailed", data)


# ---------------------------------------------------------------------------
# two-eigenvalue Seidel matrices and strongly regular graphs


@dataclass(frozen=True)
class TwoEigenvalueParams:
    lam: object
    mu: object
    m_lam: int
    m_mu: int


def _count_divisions(p: list, f: list) -> int:
    k = 0
    while True:
        q, r = pdivmod(p, f)
        if r:
            return k
        p, k = q, k + 1


def two_eigenvalue_params(s) -> Optional[TwoEigenvalueParams]:
    s = _as_seidel(s)
    n = s.order
    if n < 2:
        return None
    cp = char_poly(s.rows)
    sq = squarefree_part(cp.as_fractions())
    if len(sq) != 3:
        return None
    c, b = sq[0], sq[1]
    disc = b * b - 4 * c
    root = sqrt_rational(disc)
    lam = (-QuadraticNumber(b) + root) / 2
    mu = (-QuadraticNumber(b) - root) / 2
    if lam.is_rational:
        lam_v, mu_v = lam.a, mu.a
        m_lam = _count_divisions(cp.as_fractions(), [-lam_v, Fraction(1)])
        m_mu = _count_divisions(cp.as_fractions(), [-mu_v, Fraction(1)])
        return TwoEigenvalueParams(lam_v, mu_v, m_lam, m_mu)
    return TwoEigenvalueParams(lam, mu, n // 2, n // 2)


@dataclass(frozen=True)
class SrgParams:
    n: int
    k: int
    a: int
    c: int


def srg_params(g: Graph) -> Optional[SrgParams]:
    """(n, k, a, c) when g is connected, regular, with constant common-neighbour
    counts; graphs without edges or without non-edges are not counted."""
    n = g.order
    if n < 2 or not g.is_connected():
        return None
    degs = g.degrees()
    k = degs[0]
    if any(d != k for d in degs) or k == n - 1:
        return None
    a_vals, c_vals = set(), set()
    masks = g.masks
    for u in range(n):
        for v in range(u + 1, n):
            common = bin(masks[u] & masks[v]).count("1")
            (a_vals if masks[u] >> v & 1 else c_vals).add(common)
    if len(a_vals) != 1 or len(c_vals) != 1:
        return None
    return SrgParams(n, k, a_vals.pop(), c_vals.pop())


# ---------------------------------------------------------------------------
# equiangular lines


def lines_gram(s, lam) -> FieldSymMatrix:
    """Gram matrix I - S/lambda of unit vectors spanning the equiangular lines."""
    s = _as_seidel(s)
    if compare_largest(s, lam) != Ordering.EQUAL:
        raise NotLargestEigenvalue(f"{lam} is not the largest eigenvalue")
    n = s.order
    gram = FieldSymMatrix([[(1 if i == j else 0) - Fraction(s.rows[i][j]) / lam for j in range(n)] for i in range(n)])
    cert = psd_status(gram)
    assert cert.psd and cert.rank == rank_at(s, lam)
    return gram


# ---------------------------------------------------------------------------
# further identities


def parity_check(s) -> bool:
    """Char poly of S mod 2 equals (x+1)^n (n even) or x (x+1)^(n-1) (n odd)."""
    s = _as_seidel(s)
    n = s.order
    cp = char_poly(s.rows)
    x1 = IntPoly((1, 1))
    target = x1**n if n % 2 == 0 else IntPoly.x() * x1 ** (n - 1)
    return cp.mod(2) == target.mod(2)


def cone_equivalence_check(g: Graph) -> CheckReport:
    """lambda_max(S(G)) vs 3 agrees with lambda_min(A(cone G)) vs -2, plus the
    rank identity rank(3I - S) + 1 = rank(A(cone) + 2I)."""
    s = seidel_of(g)
    side_s = compare_largest(s, 3)
    cone = _cone(g)
    acone = cone.adjacency_matrix()
    m = FieldSymMatrix([[(2 if i == j else 0) + acone[i][j] for j in range(cone.order)] for i in range(cone.order)])
    cert = psd_status(m)
    if not cert.psd:
        side_c = Ordering.GREATER
    elif cert.rank == cone.order:
        side_c = Ordering.LESS
    else:
        side_c = Ordering.EQUAL
    data = {"seidel_vs_3": side_s.value, "cone_vs_minus2": side_c.value}
    ok = side_s == side_c
    if ok and side_s != Ordering.GREATER:
        r = rank_at(s, 3)
        data.update(rank_3I_minus_S=r, rank_cone=cert.rank)
        ok = r + 1 == cert.rank
    return CheckReport("cone_equivalence", ok, side_s.value, data)


def _cone(g: Graph) -> Graph:
    n = g.order
    return Graph(n + 1, g.edges() + [(i, n) for i in range(n)])


def _field_poly_pow(p: list, k: int) -> list:
    out = [Fraction(1)]
    for _ in range(k):
        out = pmul(out, p)
    return out


def extension_spectrum_check(s, signs: Sequence[int]) -> CheckReport:
    """For two-eigenvalue S and a bordering s keeping the largest eigenvalue,
    the spectrum of S' is lambda^m(lambda), mu^(m(mu)-1), theta, tau with
    theta + tau = mu and theta * tau = -n."""
    s = _as_seidel(s)
    params = two_eigenvalue_params(s)
    if params is None:
        raise PreconditionViolated("S does not have exactly two eigenvalues")
    ext = s.bordered(signs)
    lam, mu, n = params.lam, params.mu, s.order
    if compare_largest(ext, lam) != Ordering.EQUAL:
        raise PreconditionViolated("the bordered matrix has a larger largest eigenvalue")
    extra = [-Fraction(n), -mu, Fraction(1)] if not isinstance(mu, QuadraticNumber) else [QuadraticNumber(-n), -mu, QuadraticNumber(1)]
    expected = pmul(
        pmul(_field_poly_pow([-lam, 1], params.m_lam), _field_poly_pow([-mu, 1], params.m_mu - 1)),
        extra,
    )
    cp = char_poly(ext.rows)
    ok = len(expected) == len(cp.coeffs) and all(a == b for a, b in zip(expected, cp.coeffs))
    data = {"charpoly": cp, "extra_factor": f"x^2 + ({-mu})x + ({-n})", "lambda": lam, "mu": mu}
    if not isinstance(mu, QuadraticNumber):
        disc = mu * mu + 4 * n
        root = sqrt_rational(disc)
        theta = (QuadraticNumber(mu) + root) / 2
        tau = (QuadraticNumber(mu) - root) / 2
        data.update(theta=theta, tau=tau)
        ok = ok and theta + tau == mu and theta * tau == -n
    return CheckReport("extension_spectrum", ok, "holds" if ok else "violated", data)
