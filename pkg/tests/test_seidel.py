import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from seidelkit.algebra import QuadraticNumber, char_poly
from seidelkit.graphs import Graph, graph_from_string, switch
from seidelkit.maximality import find_extension
from seidelkit.seidel import (
    NoSpectrum,
    Ordering,
    SeidelMatrix,
    ThetaTooSmall,
    compare_largest,
    lines_gram,
    p_value,
    parity_check,
    rank_at,
    seidel_of,
    seidel_spectrum,
    srg_params,
    switching_root_check,
    bordered_psd_check,
    two_eigenvalue_params,
)
from seidelkit.suites import all_graphs, interlaces

R5 = QuadraticNumber(0, 1, 5)


def g(spec):
    return graph_from_string(spec)


def test_seidel_matrix_basics():
    s = seidel_of(g("P3"))
    assert s.rows == ((0, -1, 1), (-1, 0, -1), (1, -1, 0))
    assert SeidelMatrix.from_sign_string(3, s.sign_string()) == s
    assert SeidelMatrix.from_json(s.to_json()) == s
    assert SeidelMatrix.from_graph6(s.to_graph6()) == s
    assert s.graph() == g("P3")
    with pytest.raises(ValueError):
        SeidelMatrix([[0, 1], [-1, 0]])


def test_conjugation_is_switching():
    gr = g("C5+K1")
    signs = [1, -1, 1, 1, -1, -1]
    assert seidel_of(gr).conjugate(signs) == seidel_of(switch(gr, [1, 4, 5]))


@pytest.mark.parametrize(
    "spec,value,mult",
    [("L(K8)", 3, 21), ("E3", 2, 1), ("C5+K1", R5, 3), ("K5", 1, 4), ("L(K5)", 3, 5), ("E1", 0, 1)],
)
def test_spectra(spec, value, mult):
    sp = seidel_spectrum(g(spec))
    assert sp.value == value and sp.largest_multiplicity == mult


def test_empty_has_no_spectrum():
    with pytest.raises(NoSpectrum):
        seidel_spectrum(SeidelMatrix([]))


def test_compare_and_rank():
    s = seidel_of(g("L(K8)"))
    assert compare_largest(s, 3) == Ordering.EQUAL
    assert compare_largest(s, Fraction(299, 100)) == Ordering.GREATER
    assert compare_largest(s, Fraction(301, 100)) == Ordering.LESS
    assert rank_at(s, 3) == 7
    assert rank_at(seidel_of(g("C5+K1")), R5) == 3


def test_lines_gram_rank():
    gram = lines_gram(seidel_of(g("E3")), 2)
    assert gram.rows[0][0] == 1 and abs(gram.rows[0][1]) == Fraction(1, 2)


def test_p_values():
    assert p_value(g("T(7)"), 2) == Fraction(7, 4)
    assert p_value(g("C5"), 2) == Fraction(5, 4)
    with pytest.raises(ThetaTooSmall):
        p_value(g("K4"), Fraction(1, 2))


def test_regular_parameters():
    sp = srg_params(g("T(7)"))
    assert (sp.n, sp.k, sp.a, sp.c) == (21, 10, 5, 4)
    assert srg_params(g("K5")) is None
    assert srg_params(g("C5+K1")) is None
    tw = two_eigenvalue_params(seidel_of(g("L(K8)")))
    assert (tw.lam, tw.mu, tw.m_lam, tw.m_mu) == (3, -9, 21, 7)
    assert two_eigenvalue_params(seidel_of(g("P4"))) is None


def test_switching_root_outcomes():
    assert switching_root_check(g("E3"), Fraction(3, 2)).outcome == "SwitchingRoot"
    assert switching_root_check(g("T(5)"), 2).outcome == "NoMainEigenvector"


def test_bordered_equivalence_order_4():
    for n in range(1, 5):
        for gr in all_graphs(n):
            assert bordered_psd_check(gr, 2).ok
            assert bordered_psd_check(gr, Fraction(3, 2)).ok


def random_graph(rng, n):
    return Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.5])


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 8), st.randoms(use_true_random=False))
def test_switching_preserves_charpoly(n, rnd):
    gr = random_graph(rnd, n)
    u = [v for v in range(n) if rnd.random() < 0.5]
    assert char_poly(seidel_of(gr).rows) == char_poly(seidel_of(switch(gr, u)).rows)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10), st.randoms(use_true_random=False))
def test_parity(n, rnd):
    assert parity_check(seidel_of(random_graph(rnd, n)))


def test_interlacing_sample():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(2, 7)
        s = seidel_of(random_graph(rng, n))
        k = rng.randrange(n)
        sub = s.principal([i for i in range(n) if i != k])
        assert interlaces(char_poly(s.rows), char_poly(sub.rows))


def _two_vertex_extension(s, lam, preserve_rank):
    n = s.order
    base_rank = rank_at(s, lam)
    for a in itertools.product((1, -1), repeat=n):
        for b in itertools.product((1, -1), repeat=n):
            for c in (1, -1):
                rows = [list(r) + [a[i], b[i]] for i, r in enumerate(s.rows)]
                rows.append(list(a) + [0, c])
                rows.append(list(b) + [c, 0])
                t = SeidelMatrix(rows)
                if compare_largest(t, lam) == Ordering.GREATER:
                    continue
                if not preserve_rank or rank_at(t, lam) == base_rank:
                    return True
    return False


def test_one_vertex_reduction_up_to_order_4():
    # an extension by two vertices exists iff one by a single vertex does
    for n in range(1, 5):
        for gr in all_graphs(n):
            s = seidel_of(gr)
            lam = seidel_spectrum(s).value
            for preserve in (True, False):
                one = find_extension(s, lam, preserve).found
                assert one == _two_vertex_extension(s, lam, preserve), (gr, preserve)
