"""Root lattices A_n, D_n, E_6, E_7, E_8 and the lattice Lambda(G) of a graph.

Lambda(G) is only ever handled through its Gram matrix A(cone G) + 2I over
the cone's vertices.  Roots are enumerated after reducing the generators to
a lattice basis (integer column reduction tracking a unimodular transform),
exact LLL on the projected Gram matrix, and a Fincke-Pohst search.
"""

from __future__ import annotations

import itertools
import json
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .algebra import FieldSymMatrix, field_rank, field_solve, psd_status
from .graphs import Graph

__all__ = [
    "RootLatticeType",
    "GramLattice",
    "RootSystem",
    "InvalidType",
    "EigenvalueTooLarge",
    "NotIrreducible",
    "NotRootGenerated",
    "UnsupportedFamily",
    "standard_roots",
    "simple_roots",
    "cartan_lattice",
    "lambda_lattice",
    "lattice_basis",
    "enumerate_roots",
    "classify",
    "switching_class_rep",
    "random_class_rep",
    "admissible_pairs",
    "lattice_inclusion",
    "root_count",
]


class InvalidType(ValueError):
    pass


class EigenvalueTooLarge(ValueError):
    pass


class NotIrreducible(ValueError):
    pass


class NotRootGenerated(ValueError):
    pass


class UnsupportedFamily(ValueError):
    pass


@dataclass(frozen=True, order=True)
class RootLatticeType:
    family: str
    rank: int

    def __post_init__(self):
        ok = (
            (self.family == "A" and self.rank >= 1)
            or (self.family == "D" and self.rank >= 4)
            or (self.family == "E" and self.rank in (6, 7, 8))
        )
        if not ok:
            raise InvalidType(f"no root lattice of type {self.family}{self.rank}")

    @classmethod
    def parse(cls, text: str) -> "RootLatticeType":
        text = text.strip().replace("_", "")
        if len(text) < 2 or not text[1:].isdigit():
            raise InvalidType(f"cannot parse lattice type {text!r}")
        return cls(text[0].upper(), int(text[1:]))

    def __str__(self):
        return f"{self.family}{self.rank}"


def root_count(t: RootLatticeType) -> int:
    n = t.rank
    if t.family == "A":
        return n * n + n
    if t.family == "D":
        return 2 * n * n - 2 * n
    return {6: 72, 7: 126, 8: 240}[n]


def _dot(u, v):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def _unit(n: int, i: int, c: int = 1) -> list:
    v = [Fraction(0)] * n
    v[i] = Fraction(c)
    return v


def _d_roots(n: int) -> list[tuple]:
    out = []
    for i, j in itertools.combinations(range(n), 2):
        for si in (1, -1):
            for sj in (1, -1):
                v = [Fraction(0)] * n
                v[i], v[j] = Fraction(si), Fraction(sj)
                out.append(tuple(v))
    return out


def _e8_roots() -> list[tuple]:
    half = Fraction(1, 2)
    out = _d_roots(8)
    for signs in itertools.product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            out.append(tuple(half * s for s in signs))
    return out


_E7_CUT = (tuple(_unit(8, 0)[i] - _unit(8, 1)[i] for i in range(8)),)
_E6_CUT = _E7_CUT + (tuple(_unit(8, 1)[i] - _unit(8, 2)[i] for i in range(8)),)


@dataclass(frozen=True)
class RootSystem:
    """Norm-2 vectors of a lattice, closed under negation.

    ``roots`` are rational standard coordinates for the standard lattices and
    integer generator coordinates for a :class:`GramLattice`.
    """

    roots: tuple
    ambient: Union["GramLattice", RootLatticeType]

    def __len__(self):
        return len(self.roots)

    def inner(self, u, v):
        if isinstance(self.ambient, GramLattice):
            g = self.ambient.gram
            return sum(u[i] * g[i][j] * v[j] for i in range(len(u)) if u[i] for j in range(len(v)) if v[j])
        return _dot(u, v)

    def to_text(self) -> str:
        return "\n".join(" ".join(str(x) for x in r) for r in self.roots) + ("\n" if self.roots else "")


def standard_roots(t: RootLatticeType) -> RootSystem:
    n = t.rank
    if t.family == "A":
        roots = []
        for i, j in itertools.permutations(range(n + 1), 2):
            v = [Fraction(0)] * (n + 1)
            v[i], v[j] = Fraction(1), Fraction(-1)
            roots.append(tuple(v))
    elif t.family == "D":
        roots = _d_roots(n)
    else:
        cuts = {8: (), 7: _E7_CUT, 6: _E6_CUT}[n]
        roots = [r for r in _e8_roots() if all(_dot(r, c) == 0 for c in cuts)]
    return RootSystem(tuple(sorted(roots)), t)


def simple_roots(t: RootLatticeType) -> list[tuple]:
    """Simple roots for the positive system cut out by a generic functional."""
    roots = standard_roots(t).roots
    dim = len(roots[0])
    # weights 1, 1/10, 1/100, ... are generic for every root in these systems
    f = [Fraction(1, 10**i) + Fraction(1, 10 ** (dim + i + 3)) for i in range(dim)]
    positive = [r for r in roots if _dot(f, r) > 0]
    pos_set = set(positive)
    simple = []
    for r in positive:
        decomposable = any(
            tuple(a - b for a, b in zip(r, p)) in pos_set for p in positive if p != r
        )
        if not decomposable:
            simple.append(r)
    if len(simple) != t.rank:
        raise AssertionError(f"found {len(simple)} simple roots for {t}")
    return simple


# ---------------------------------------------------------------------------
# Gram lattices


@dataclass(frozen=True)
class GramLattice:
    """Lattice spanned by generators with the given integer Gram matrix."""

    gram: tuple

    def __post_init__(self):
        g = tuple(tuple(int(x) for x in row) for row in self.gram)
        object.__setattr__(self, "gram", g)
        FieldSymMatrix(g)

    @property
    def generators(self) -> int:
        return len(self.gram)

    @property
    def rank(self) -> int:
        return field_rank(self.gram)

    def to_json(self) -> dict:
        return {"gram": [list(r) for r in self.gram], "rank": self.rank}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def cartan_lattice(t: RootLatticeType) -> GramLattice:
    s = simple_roots(t)
    return GramLattice(tuple(tuple(int(_dot(a, b)) for b in s) for a in s))


def _cone(g: Graph) -> Graph:
    n = g.order
    return Graph(n + 1, g.edges() + [(i, n) for i in range(n)])


def lambda_lattice(g: Graph) -> GramLattice:
    """Gram lattice A(cone G) + 2I."""
    c = _cone(g)
    a = c.adjacency_matrix()
    gram = tuple(tuple(a[i][j] + (2 if i == j else 0) for j in range(c.order)) for i in range(c.order))
    if not psd_status(FieldSymMatrix(gram)).psd:
        raise EigenvalueTooLarge("the cone has an eigenvalue below -2 (largest Seidel eigenvalue above 3)")
    return GramLattice(gram)


# ---------------------------------------------------------------------------
# basis reduction


def _column_reduce(m: list[list[int]]) -> tuple[list[list[int]], list[list[int]], int]:
    """Unimodular U with M U = [H | 0]; returns (M U, U, r) with r nonzero columns."""
    rows, cols = len(m), len(m[0]) if m else 0
    a = [list(r) for r in m]
    u = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    def colop(dst, src, k):  # col[dst] -= k * col[src]
        for row in a:
            row[dst] -= k * row[src]
        for row in u:
            row[dst] -= k * row[src]

    def swap(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in u:
            row[i], row[j] = row[j], row[i]

    r = 0
    for i in range(rows):
        if r == cols:
            break
        while True:
            nz = [j for j in range(r, cols) if a[i][j] != 0]
            if not nz:
                break
            p = min(nz, key=lambda j: abs(a[i][j]))
            if p != r:
                swap(p, r)
            done = True
            for j in range(r + 1, cols):
                if a[i][j]:
                    colop(j, r, a[i][j] // a[i][r])
                    if a[i][j]:
                        done = False
            if done:
                r += 1
                break
    return a, u, r


def _gso(b: list[list[int]], g: list[list[int]]):
    """Gram-Schmidt data (mu, squared norms) for basis rows b under form g."""
    n = len(b)

    def ip(x, y):
        return sum(x[i] * g[i][j] * y[j] for i in range(len(x)) if x[i] for j in range(len(y)) if y[j])

    gram = [[Fraction(ip(b[i], b[j])) for j in range(n)] for i in range(n)]
    mu = [[Fraction(0)] * n for _ in range(n)]
    bstar = [Fraction(0)] * n
    for i in range(n):
        for j in range(i):
            mu[i][j] = (gram[i][j] - sum((mu[j][k] * mu[i][k] * bstar[k] for k in range(j)), Fraction(0))) / bstar[j]
        bstar[i] = gram[i][i] - sum((mu[i][k] ** 2 * bstar[k] for k in range(i)), Fraction(0))
    return mu, bstar


def _lll(b: list[list[int]], g: list[list[int]], delta=Fraction(3, 4)) -> list[list[int]]:
    b = [list(x) for x in b]
    n = len(b)
    k = 1
    while k < n:
        mu, bstar = _gso(b, g)
        for j in range(k - 1, -1, -1):
            q = round(mu[k][j])
            if q:
                b[k] = [x - q * y for x, y in zip(b[k], b[j])]
                mu, bstar = _gso(b, g)
        if bstar[k] >= (delta - mu[k][k - 1] ** 2) * bstar[k - 1]:
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            k = max(k - 1, 1)
    return b


def lattice_basis(lat: GramLattice) -> list[list[int]]:
    """Integer generator-coordinate vectors forming an LLL-reduced lattice basis."""
    g = [list(r) for r in lat.gram]
    if not g:
        return []
    _, u, r = _column_reduce(g)
    basis = [[u[i][j] for i in range(len(u))] for j in range(r)]
    return _lll(basis, g)


def _fincke_pohst(q: list[list[Fraction]], bound: Fraction) -> list[tuple[int, ...]]:
    """All nonzero y with y^T Q y <= bound, Q positive definite rational."""
    n = len(q)
    # q = sum_i d_i (y_i + sum_{j>i} c_ij y_j)^2
    a = [[Fraction(x) for x in row] for row in q]
    d = [Fraction(0)] * n
    c = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        d[i] = a[i][i]
        for j in range(i + 1, n):
            c[i][j] = a[i][j] / d[i]
        for j in range(i + 1, n):
            for k in range(j, n):
                a[j][k] -= c[i][j] * a[i][k]
                a[k][j] = a[j][k]
    out = []
    y = [0] * n

    def rec(i: int, remaining: Fraction):
        if i < 0:
            if any(y):
                out.append(tuple(y))
            return
        center = -sum((c[i][j] * y[j] for j in range(i + 1, n)), Fraction(0))
        span = math.isqrt(math.floor(remaining / d[i])) + 1
        lo = math.ceil(center) - span
        hi = math.floor(center) + span
        for v in range(lo, hi + 1):
            t = d[i] * (v - center) ** 2
            if t <= remaining:
                y[i] = v
                rec(i - 1, remaining - t)
        y[i] = 0

    rec(n - 1, Fraction(bound))
    return out


def enumerate_roots(lat: GramLattice) -> RootSystem:
    """All norm-2 lattice vectors, one representative per lattice vector, in
    generator coordinates, sorted."""
    basis = lattice_basis(lat)
    g = lat.gram
    if not basis:
        return RootSystem((), lat)
    n = len(basis)
    proj = [
        [sum(basis[i][p] * g[p][q] * basis[j][q] for p in range(len(g)) for q in range(len(g))) for j in range(n)]
        for i in range(n)
    ]
    ys = [y for y in _fincke_pohst(proj, Fraction(2)) if _qform(proj, y) == 2]
    roots = sorted(tuple(sum(y[k] * basis[k][i] for k in range(n)) for i in range(len(g))) for y in ys)
    return RootSystem(tuple(roots), lat)


def _qform(q, y):
    return sum(y[i] * q[i][j] * y[j] for i in range(len(y)) for j in range(len(y)))


def _abs_det(m: list[list[int]]) -> int:
    n = len(m)
    a = [[Fraction(x) for x in r] for r in m]
    det = Fraction(1)
    for i in range(n):
        p = next((r for r in range(i, n) if a[r][i] != 0), None)
        if p is None:
            return 0
        a[i], a[p] = a[p], a[i]
        det *= a[i][i]
        for r in range(i + 1, n):
            f = a[r][i] / a[i][i]
            a[r] = [x - f * y for x, y in zip(a[r], a[i])]
    return abs(int(det))


def classify(lat: GramLattice, roots: Optional[RootSystem] = None) -> RootLatticeType:
    """Type from (rank, root count), after checking the roots generate the
    lattice and their inner-product graph is connected."""
    roots = roots if roots is not None else enumerate_roots(lat)
    rank = lat.rank
    rs = list(roots.roots)
    if rank == 0 or not rs:
        raise NotRootGenerated("lattice has no roots")
    # generation: roots expressed in a lattice basis must have full integer span
    basis = lattice_basis(lat)
    g = lat.gram
    coords = []
    for r in rs:
        # solve r = sum y_k basis_k via the projected Gram (exact)
        coords.append(_basis_coords(r, basis, g))
    h, _, rr = _column_reduce([[c[k] for c in coords] for k in range(len(basis))])
    square = [row[:rr] for row in h]
    if rr != rank or _abs_det(square) != 1:
        raise NotRootGenerated("roots span a proper sublattice")
    # irreducibility: connected under nonzero inner products
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(len(rs)):
            if j not in seen and roots.inner(rs[i], rs[j]) != 0:
                seen.add(j)
                stack.append(j)
    if len(seen) != len(rs):
        raise NotIrreducible("root system is decomposable")
    count = len(rs)
    for t in _candidates(rank):
        if root_count(t) == count:
            return t
    raise NotRootGenerated(f"no irreducible type of rank {rank} has {count} roots")


def _candidates(rank: int) -> list[RootLatticeType]:
    out = [RootLatticeType("A", rank)]
    if rank >= 4:
        out.append(RootLatticeType("D", rank))
    if rank in (6, 7, 8):
        out.append(RootLatticeType("E", rank))
    return out


def _basis_coords(v, basis, g) -> list[int]:
    n = len(basis)
    m = len(g)

    def ip(x, y):
        return sum(x[p] * g[p][q] * y[q] for p in range(m) if x[p] for q in range(m) if y[q])

    gram = [[Fraction(ip(basis[i], basis[j])) for j in range(n)] for i in range(n)]
    rhs = [Fraction(ip(basis[i], v)) for i in range(n)]
    y = field_solve(gram, rhs)
    assert y is not None and all(c.denominator == 1 for c in y)
    return [int(c) for c in y]


# ---------------------------------------------------------------------------
# switching classes [L]


def _graph_from_vectors(xs: Sequence[tuple]) -> Graph:
    edges = []
    for i, j in itertools.combinations(range(len(xs)), 2):
        ip = _dot(xs[i], xs[j])
        if ip == 1:
            edges.append((i, j))
        elif ip != 0:
            raise AssertionError("admissible roots must have inner product 0 or 1")
    return Graph(len(xs), edges)


def _switching_root_and_x(t: RootLatticeType) -> tuple[tuple, list[tuple]]:
    n = t.rank
    if t.family == "A":
        dim = n + 1
        r = tuple(a - b for a, b in zip(_unit(dim, 0), _unit(dim, 1)))
        xs = [tuple(a - b for a, b in zip(_unit(dim, 0), _unit(dim, i))) for i in range(2, dim)]
        return r, xs
    if t.family == "D":
        r = tuple(a + b for a, b in zip(_unit(n, 0), _unit(n, 1)))
        xs = [tuple(a + b for a, b in zip(_unit(n, i), _unit(n, j))) for i in (0, 1) for j in range(2, n)]
        return r, xs
    r = tuple([Fraction(1, 2)] * 8)
    pairs = {8: list(itertools.combinations(range(8), 2)),
             7: [(0, 1)] + list(itertools.combinations(range(2, 8), 2)),
             6: list(itertools.combinations(range(3, 8), 2))}[n]
    xs = [tuple(a + b for a, b in zip(_unit(8, i), _unit(8, j))) for i, j in pairs]
    return r, xs


def switching_class_rep(t: RootLatticeType) -> Graph:
    """Graph L with A(L) + 2I the Gram matrix of a fixed admissible set X of
    roots with inner product 1 against a fixed root r."""
    _, xs = _switching_root_and_x(t)
    return _graph_from_vectors(xs)


def admissible_pairs(t: RootLatticeType, r: Optional[tuple] = None) -> list[tuple[tuple, tuple]]:
    """Roots alpha with (r, alpha) = 1, paired as {alpha, r - alpha}."""
    if r is None:
        r, _ = _switching_root_and_x(t)
    roots = standard_roots(t).roots
    n_set = [a for a in roots if _dot(r, a) == 1]
    pairs, used = [], set()
    lookup = set(n_set)
    for a in n_set:
        if a in used:
            continue
        b = tuple(x - y for x, y in zip(r, a))
        assert b in lookup and b != a
        used.update((a, b))
        pairs.append((a, b))
    return pairs


def random_class_rep(t: RootLatticeType, rng: random.Random, r: Optional[tuple] = None) -> Graph:
    """[L] built from a random admissible X (one root from each pair)."""
    xs = [p[rng.randrange(2)] for p in admissible_pairs(t, r)]
    rng.shuffle(xs)
    return _graph_from_vectors(xs)


# ---------------------------------------------------------------------------
# inclusions among D and E lattices


def lattice_inclusion(s: RootLatticeType, t: RootLatticeType) -> bool:
    """Whether s embeds in t, for D and E types."""
    if "A" in (s.family, t.family):
        raise UnsupportedFamily("inclusions are tabulated for types D and E only")
    if s.family == "D" and t.family == "D":
        return s.rank <= t.rank
    if s.family == "E" and t.family == "E":
        return s.rank <= t.rank
    if s.family == "D":
        return s.rank <= {6: 5, 7: 6, 8: 8}[t.rank]
    return False
