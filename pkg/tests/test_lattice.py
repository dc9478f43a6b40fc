import random

import pytest

from seidelkit.graphs import graph_from_string, is_switching_equivalent, switch
from seidelkit.lattice import (
    EigenvalueTooLarge,
    GramLattice,
    InvalidType,
    NotIrreducible,
    NotRootGenerated,
    RootLatticeType,
    UnsupportedFamily,
    admissible_pairs,
    cartan_lattice,
    classify,
    enumerate_roots,
    lambda_lattice,
    lattice_inclusion,
    root_count,
    standard_roots,
    switching_class_rep,
)

T = RootLatticeType.parse


def test_types():
    assert str(T("E8")) == "E8" and T("d_5") == RootLatticeType("D", 5)
    assert T("A3") < T("D4")
    for bad in ("D3", "E9", "B2", "A0"):
        with pytest.raises(InvalidType):
            T(bad)
    assert [root_count(T(x)) for x in ("A2", "D4", "E6", "E7", "E8")] == [6, 24, 72, 126, 240]


@pytest.mark.parametrize("name", ["A1", "A4", "D4", "D6", "E6", "E7", "E8"])
def test_cartan_enumeration(name):
    t = T(name)
    lat = cartan_lattice(t)
    roots = enumerate_roots(lat)
    assert len(roots) == root_count(t) == len(standard_roots(t))
    assert classify(lat, roots) == t
    # roots come in +- pairs of norm 2
    assert all(roots.inner(r, r) == 2 for r in roots.roots)


@pytest.mark.parametrize(
    "spec,name",
    [("K4", "A5"), ("C4", "D4"), ("L(K5)", "E6"), ("L(K6)+K1", "E7"), ("L(K8)", "E8"), ("L(K2,6)", "D8"), ("E1", "A2")],
)
def test_lambda_classification(spec, name):
    assert classify(lambda_lattice(graph_from_string(spec))) == T(name)


def test_lambda_invariant_under_switching():
    rng = random.Random(1)
    g = graph_from_string("L(K5)")
    for _ in range(3):
        h = switch(g, [v for v in range(g.order) if rng.random() < 0.5])
        assert classify(lambda_lattice(h)) == T("E6")


def test_eigenvalue_too_large():
    with pytest.raises(EigenvalueTooLarge):
        lambda_lattice(graph_from_string("E5"))


def test_classify_errors():
    # A1 + A1 is decomposable
    with pytest.raises(NotIrreducible):
        classify(GramLattice(((2, 0), (0, 2))))
    # 2Z has no vectors of norm 2
    with pytest.raises(NotRootGenerated):
        classify(GramLattice(((4,),)))


@pytest.mark.parametrize("name,spec", [("A3", "K2"), ("A6", "K5"), ("D5", "L(K2,3)"), ("E6", "L(K5)"), ("E7", "L(K6)+K1")])
def test_switching_class_reps(name, spec):
    assert is_switching_equivalent(switching_class_rep(T(name)), graph_from_string(spec)) is not None


def test_e8_admissible_pairs():
    pairs = admissible_pairs(T("E8"))
    assert len(pairs) == 28


def test_inclusion_table():
    assert lattice_inclusion(T("D8"), T("E8"))
    assert not lattice_inclusion(T("D7"), T("E7"))
    assert lattice_inclusion(T("E6"), T("E7"))
    assert not lattice_inclusion(T("E8"), T("D9"))
    with pytest.raises(UnsupportedFamily):
        lattice_inclusion(T("A3"), T("D4"))
