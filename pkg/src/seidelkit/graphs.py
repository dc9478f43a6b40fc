"""Simple graphs, named constructions, switching and switching equivalence.

Vertex labels are fixed per constructor so results are reproducible:

* ``Complete(n)``, ``Empty(n)``: vertices 0..n-1.
* ``CompleteBipartite(a, b)``: parts 0..a-1 and a..a+b-1.
* ``Cycle(n)``: i ~ i+1 (mod n); ``Path(n)``: i ~ i+1.
* ``LineGraph(g)``: edges of g sorted lexicographically as pairs (i < j).
* ``Cone(g)``: the apex is the last vertex.
* ``DisjointUnion(g, h, ...)``: g's vertices first, then h's, shifted.
* ``Triangular(n)``: ``LineGraph(Complete(n))``.
* ``Paley(q)``: vertices 0..q-1, x ~ y iff x - y is a nonzero square mod q.
* ``HatK(n)``: K_n on 0..n-1 plus vertex n adjacent to n-1.
* ``Tree(n)``: claw centre 0, leaves 1..n, vertex n+1 attached to leaf n.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional, Sequence

import networkx as nx

__all__ = [
    "Graph",
    "GraphSpec",
    "InvalidSpec",
    "OrderMismatch",
    "SwitchingCertificate",
    "build",
    "parse_spec",
    "graph_from_string",
    "switch",
    "descendant",
    "is_switching_equivalent",
    "find_isomorphism",
    "seidel_charpoly_key",
]


class InvalidSpec(ValueError):
    pass


class OrderMismatch(ValueError):
    pass


class Graph:
    """Immutable labeled simple graph on vertices 0..order-1 (adjacency bitmasks)."""

    __slots__ = ("_adj",)

    def __init__(self, order: int = 0, edges: Iterable[tuple[int, int]] = ()):
        adj = [0] * order
        for u, v in edges:
            if u == v:
                raise ValueError("loops are not allowed")
            if not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"edge ({u}, {v}) out of range")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._adj = tuple(adj)

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "Graph":
        g = cls.__new__(cls)
        g._adj = tuple(masks)
        return g

    @classmethod
    def from_matrix(cls, a: Sequence[Sequence[int]]) -> "Graph":
        n = len(a)
        return cls(n, [(i, j) for i in range(n) for j in range(i + 1, n) if a[i][j]])

    @classmethod
    def from_graph6(cls, text: str) -> "Graph":
        g = nx.from_graph6_bytes(text.strip().encode())
        return cls(g.number_of_nodes(), g.edges())

    def to_graph6(self) -> str:
        g = nx.Graph()
        g.add_nodes_from(range(self.order))
        g.add_edges_from(self.edges())
        return nx.to_graph6_bytes(g, header=False).decode().strip()

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.order))
        g.add_edges_from(self.edges())
        return g

    # -- queries --------------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self._adj)

    @property
    def masks(self) -> tuple[int, ...]:
        return self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        m = self._adj[v]
        return [u for u in range(self.order) if m >> u & 1]

    def degree(self, v: int) -> int:
        return bin(self._adj[v]).count("1")

    def degrees(self) -> list[int]:
        return [bin(m).count("1") for m in self._adj]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in range(u + 1, self.order) if self._adj[u] >> v & 1]

    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def adjacency_matrix(self) -> list[list[int]]:
        n = self.order
        return [[self._adj[i] >> j & 1 for j in range(n)] for i in range(n)]

    def is_connected(self) -> bool:
        n = self.order
        if n == 0:
            return True
        seen, frontier = 1, 1
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= self._adj[low.bit_length() - 1]
                m ^= low
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << n) - 1

    # -- constructions --------------------------------------------------------

    def complement(self) -> "Graph":
        full = (1 << self.order) - 1
        return Graph.from_masks([(full ^ m) & ~(1 << i) for i, m in enumerate(self._adj)])

    def induced(self, vertices: Sequence[int]) -> "Graph":
        vs = list(vertices)
        return Graph(len(vs), [(a, b) for a, b in combinations(range(len(vs)), 2) if self.has_edge(vs[a], vs[b])])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex i renamed perm[i]."""
        return Graph(self.order, [(perm[u], perm[v]) for u, v in self.edges()])

    def __add__(self, other: "Graph") -> "Graph":
        k = self.order
        return Graph.from_masks(list(self._adj) + [m << k for m in other._adj])

    def __eq__(self, other):
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self):
        return hash(self._adj)

    def __repr__(self):
        return f"Graph(order={self.order}, edges={self.num_edges()}, graph6={self.to_graph6()!r})"


# ---------------------------------------------------------------------------
# graph specifications


@dataclass(frozen=True)
class GraphSpec:
    """Constructor tag with integer parameters and nested specs."""

    kind: str
    params: tuple[int, ...] = ()
    children: tuple["GraphSpec", ...] = field(default=())

    def __str__(self) -> str:
        p, c = self.params, self.children
        k = self.kind
        if k == "Complete":
            return f"K{p[0]}"
        if k == "Empty":
            return f"E{p[0]}"
        if k == "CompleteBipartite":
            return f"K{p[0]},{p[1]}"
        if k == "Cycle":
            return f"C{p[0]}"
        if k == "Path":
            return f"P{p[0]}"
        if k == "LineGraph":
            return f"L({c[0]})"
        if k == "Cone":
            return f"cone({c[0]})"
        if k == "Complement":
            return f"comp({c[0]})"
        if k == "DisjointUnion":
            return "+".join(str(x) for x in c)
        if k == "Triangular":
            return f"T({p[0]})"
        if k == "Paley":
            return f"Paley({p[0]})"
        if k == "HatK":
            return f"hatK({p[0]})"
        if k == "Tree":
            return f"tree({p[0]})"
        if k == "McLaughlin":
            return "McL"
        return f"{k}{p}{c}"


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    i = 2
    while i * i <= q:
        if q % i == 0:
            return False
        i += 1
    return True


def _validate(spec: GraphSpec) -> None:
    k, p = spec.kind, spec.params
    need_pos = {"Complete": 0, "Empty": 0, "Cycle": 3, "Path": 0, "Triangular": 1}
    if k in need_pos and p[0] < need_pos[k]:
        raise InvalidSpec(f"{k}({p[0]}) out of range")
    if k == "CompleteBipartite" and min(p) < 0:
        raise InvalidSpec("negative part size")
    if k == "Paley" and not (_is_prime(p[0]) and p[0] % 4 == 1):
        raise InvalidSpec(f"Paley({p[0]}) needs a prime q = 1 mod 4")
    if k == "HatK" and p[0] < 2:
        raise InvalidSpec("hatK(n) needs n >= 2")
    if k == "Tree" and p[0] < 1:
        raise InvalidSpec("tree(n) needs n >= 1")
    if k == "McLaughlin":
        raise InvalidSpec("the McLaughlin graph is reserved and not implemented")


def build(spec: GraphSpec) -> Graph:
    _validate(spec)
    k, p, c = spec.kind, spec.params, spec.children
    if k == "Complete":
        n = p[0]
        return Graph(n, combinations(range(n), 2))
    if k == "Empty":
        return Graph(p[0])
    if k == "CompleteBipartite":
        a, b = p
        return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])
    if k == "Cycle":
        n = p[0]
        return Graph(n, [(i, (i + 1) % n) for i in range(n)])
    if k == "Path":
        n = p[0]
        return Graph(n, [(i, i + 1) for i in range(n - 1)])
    if k == "LineGraph":
        return line_graph(build(c[0]))
    if k == "Cone":
        g = build(c[0])
        n = g.order
        return Graph(n + 1, g.edges() + [(i, n) for i in range(n)])
    if k == "Complement":
        return build(c[0]).complement()
    if k == "DisjointUnion":
        out = Graph(0)
        for child in c:
            out = out + build(child)
        return out
    if k == "Triangular":
        return line_graph(build(GraphSpec("Complete", p)))
    if k == "Paley":
        q = p[0]
        squares = {x * x % q for x in range(1, q)}
        return Graph(q, [(x, y) for x in range(q) for y in range(x + 1, q) if (y - x) % q in squares])
    if k == "HatK":
        n = p[0]
        return Graph(n + 1, list(combinations(range(n), 2)) + [(n - 1, n)])
    if k == "Tree":
        n = p[0]
        return Graph(n + 2, [(0, i) for i in range(1, n + 1)] + [(n, n + 1)])
    raise InvalidSpec(f"unknown constructor {k!r}")


def line_graph(g: Graph) -> Graph:
    es = g.edges()
    return Graph(len(es), [(a, b) for a, b in combinations(range(len(es)), 2) if set(es[a]) & set(es[b])])


_ATOM = re.compile(r"(Kbar|K|E|C|P)(\d+)(?:,(\d+))?")
_FUNC = re.compile(r"(L|cone|comp|T|Paley|hatK|tree)\(")


def parse_spec(text: str) -> GraphSpec:
    """Parse the compact grammar, e.g. ``L(K8)``, ``L(K2,5)+K1``, ``Paley(13)``,
    ``hatK(6)``, ``cone(C5)``, ``comp(C5)``, ``E4`` (or ``Kbar4``), ``P4``,
    ``T(7)``, ``tree(4)``."""
    s = text.replace(" ", "")
    pos = 0

    def expr() -> GraphSpec:
        nonlocal pos
        parts = [term()]
        while pos < len(s) and s[pos] == "+":
            pos += 1
            parts.append(term())
        if len(parts) == 1:
            return parts[0]
        return GraphSpec("DisjointUnion", (), tuple(parts))

    def integer_arg() -> int:
        nonlocal pos
        m = re.compile(r"(\d+)\)").match(s, pos)
        if not m:
            raise InvalidSpec(f"expected integer argument at {pos} in {text!r}")
        pos = m.end()
        return int(m.group(1))

    def term() -> GraphSpec:
        nonlocal pos
        if s.startswith("McL", pos):
            pos += 3
            return GraphSpec("McLaughlin")
        m = _FUNC.match(s, pos)
        if m:
            pos = m.end()
            name = m.group(1)
            if name in ("T", "Paley", "hatK", "tree"):
                kind = {"T": "Triangular", "Paley": "Paley", "hatK": "HatK", "tree": "Tree"}[name]
                return GraphSpec(kind, (integer_arg(),))
            inner = expr()
            if pos >= len(s) or s[pos] != ")":
                raise InvalidSpec(f"missing ')' in {text!r}")
            pos += 1
            kind = {"L": "LineGraph", "cone": "Cone", "comp": "Complement"}[name]
            return GraphSpec(kind, (), (inner,))
        m = _ATOM.match(s, pos)
        if m:
            pos = m.end()
            head, a, b = m.group(1), int(m.group(2)), m.group(3)
            if b is not None:
                if head != "K":
                    raise InvalidSpec(f"only K takes two parameters: {text!r}")
                return GraphSpec("CompleteBipartite", (a, int(b)))
            kind = {"K": "Complete", "Kbar": "Empty", "E": "Empty", "C": "Cycle", "P": "Path"}[head]
            return GraphSpec(kind, (a,))
        raise InvalidSpec(f"cannot parse graph spec {text!r} at position {pos}")

    out = expr()
    if pos != len(s):
        raise InvalidSpec(f"trailing input in {text!r}")
    _check(out)
    return out


def _check(spec: GraphSpec) -> None:
    _validate(spec)
    for c in spec.children:
        _check(c)


def graph_from_string(text: str) -> Graph:
    """Accept a GraphSpec string, or graph6 when prefixed with 'g6:'."""
    if text.startswith("g6:"):
        return Graph.from_graph6(text[3:])
    return build(parse_spec(text))


# ---------------------------------------------------------------------------
# switching


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def switch(g: Graph, u: Iterable[int]) -> Graph:
    """Complement all adjacencies across the cut (U, V \\ U)."""
    n = g.order
    um = _mask(u)
    full = (1 << n) - 1
    if um & ~full:
        raise ValueError("switching set not contained in the vertex set")
    out = []
    for i, m in enumerate(g.masks):
        side = full & ~um if um >> i & 1 else um
        out.append(m ^ side)
    return Graph.from_masks(out)


def descendant(g: Graph, v: int) -> Graph:
    """The member of [g] in which v is isolated: switch(g, N(v))."""
    return switch(g, g.neighbors(v))


@dataclass(frozen=True)
class SwitchingCertificate:
    """H == switch(G, U) relabeled by perm (vertex i of G becomes perm[i])."""

    perm: tuple[int, ...]
    switched: frozenset[int]

    def apply(self, g: Graph) -> Graph:
        return switch(g, self.switched).relabel(self.perm)


def seidel_charpoly_key(g: Graph) -> tuple[int, ...]:
    from .algebra.matrix import char_poly

    n = g.order
    a = g.adjacency_matrix()
    s = [[0 if i == j else 1 - 2 * a[i][j] for j in range(n)] for i in range(n)]
    return char_poly(s).coeffs


def _descendant_degree_profile(g: Graph) -> tuple:
    return tuple(sorted(tuple(sorted(descendant(g, v).degrees())) for v in range(g.order)))


def _refine(graphs: list[Graph], colors: list[list[int]]) -> list[list[int]]:
    """Joint colour refinement so colours are comparable across the graphs."""
    while True:
        sigs = []
        for g, col in zip(graphs, colors):
            sigs.append(
                [(col[v], tuple(sorted(col[u] for u in g.neighbors(v)))) for v in range(g.order)]
            )
        palette = {s: i for i, s in enumerate(sorted({s for sig in sigs for s in sig}))}
        new = [[palette[s] for s in sig] for sig in sigs]
        if all(len(set(a)) == len(set(b)) for a, b in zip(new, colors)):
            return new
        colors = new


def find_isomorphism(g: Graph, h: Graph, fixed: Optional[tuple[int, int]] = None) -> Optional[tuple[int, ...]]:
    """A bijection phi with phi(g) == h, optionally forcing fixed[0] -> fixed[1]."""
    n = g.order
    if n != h.order or sorted(g.degrees()) != sorted(h.degrees()):
        return None
    init_g = [0] * n
    init_h = [0] * n
    if fixed is not None:
        init_g[fixed[0]] = 1
        init_h[fixed[1]] = 1
    cg, ch = _refine([g, h], [init_g, init_h])
    if sorted(cg) != sorted(ch):
        return None
    by_color: dict[int, list[int]] = {}
    for v, c in enumerate(ch):
        by_color.setdefault(c, []).append(v)
    size = {c: len(vs) for c, vs in by_color.items()}
    # map small colour classes first, then stay adjacent to mapped vertices
    order: list[int] = []
    left = set(range(n))
    while left:
        mapped_mask = _mask(order)
        best = min(
            left,
            key=lambda v: (size[cg[v]], -bin(g.masks[v] & mapped_mask).count("1"), v),
        )
        order.append(best)
        left.remove(best)
    phi = [-1] * n
    used = 0

    def extend(k: int) -> bool:
        nonlocal used
        if k == n:
            return True
        v = order[k]
        for w in by_color[cg[v]]:
            if used >> w & 1:
                continue
            ok = True
            for t in range(k):
                x = order[t]
                if g.has_edge(v, x) != h.has_edge(w, phi[x]):
                    ok = False
                    break
            if not ok:
                continue
            phi[v] = w
            used |= 1 << w
            if extend(k + 1):
                return True
            used &= ~(1 << w)
            phi[v] = -1
        return False

    if extend(0):
        return tuple(phi)
    return None


def is_switching_equivalent(g: Graph, h: Graph) -> Optional[SwitchingCertificate]:
    """Certificate (perm, U) with h == perm(switch(g, U)), or None."""
    if g.order != h.order:
        raise OrderMismatch(f"orders differ: {g.order} vs {h.order}")
    n = g.order
    if n == 0:
        return SwitchingCertificate((), frozenset())
    if seidel_charpoly_key(g) != seidel_charpoly_key(h):
        return None
    if _descendant_degree_profile(g) != _descendant_degree_profile(h):
        return None
    g0 = descendant(g, 0)
    ng0 = set(g.neighbors(0))
    for w in range(n):
        hw = descendant(h, w)
        phi = find_isomorphism(g0, hw, fixed=(0, w))
        if phi is None:
            continue
        inv = {phi[i]: i for i in range(n)}
        back = {inv[x] for x in h.neighbors(w)}
        cert = SwitchingCertificate(tuple(phi), frozenset(ng0 ^ back))
        assert cert.apply(g) == h
        return cert
    return None
