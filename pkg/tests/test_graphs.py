import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from seidelkit.graphs import (
    Graph,
    InvalidSpec,
    descendant,
    graph_from_string,
    is_switching_equivalent,
    switch,
)


@pytest.mark.parametrize(
    "spec,order,edges",
    [("K8", 8, 28), ("K2,5", 7, 10), ("E4", 4, 0), ("C5", 5, 5), ("P4", 4, 3), ("L(K8)", 28, 168),
     ("T(7)", 21, 105), ("Paley(13)", 13, 39), ("C5+K1", 6, 5), ("hatK(5)", 6, 11), ("cone(C5)", 6, 10)],
)
def test_specs(spec, order, edges):
    g = graph_from_string(spec)
    assert (g.order, g.num_edges()) == (order, edges)


def test_bad_spec():
    with pytest.raises(InvalidSpec):
        graph_from_string("Q9")
    with pytest.raises(InvalidSpec):
        graph_from_string("Paley(7)")


def graphs(max_n=9):
    @st.composite
    def build(draw):
        n = draw(st.integers(1, max_n))
        bits = draw(st.lists(st.booleans(), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        return Graph(n, [p for p, b in zip(pairs, bits) if b])

    return build()


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_graph6_roundtrip(g):
    s = g.to_graph6()
    assert Graph.from_graph6(s) == g
    assert nx.to_graph6_bytes(g.to_networkx(), header=False).decode().strip() == s


@settings(max_examples=100, deadline=None)
@given(graphs(), st.randoms(use_true_random=False))
def test_switch_and_certificate(g, rnd):
    u = [v for v in range(g.order) if rnd.random() < 0.5]
    perm = list(range(g.order))
    rnd.shuffle(perm)
    h = switch(g, u).relabel(perm)
    cert = is_switching_equivalent(g, h)
    assert cert is not None and cert.apply(g) == h
    assert switch(switch(g, u), u) == g


def test_descendant_isolates_vertex():
    g = graph_from_string("Paley(13)")
    d = descendant(g, 3)
    assert d.degree(3) == 0


def test_inequivalent():
    assert is_switching_equivalent(graph_from_string("C5+K1"), graph_from_string("E6")) is None
    assert is_switching_equivalent(graph_from_string("L(K6)+K1"), graph_from_string("L(K2,8)")) is None


def test_order_mismatch():
    from seidelkit.graphs import OrderMismatch

    with pytest.raises(OrderMismatch):
        is_switching_equivalent(graph_from_string("K3"), graph_from_string("K4"))
