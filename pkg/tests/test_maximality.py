import pytest

from seidelkit.algebra import QuadraticNumber
from seidelkit.graphs import graph_from_string, is_switching_equivalent
from seidelkit.maximality import (
    InvalidRank,
    OutOfBudget,
    extendability_criterion,
    extremal_construction,
    find_extension,
    find_extension_bruteforce,
    hatk_eigenvalue_check,
    is_maximal,
    is_strongly_maximal,
    lambda_table,
    strong_maximality_via_lattice,
    witness_member,
)
from seidelkit.seidel import Ordering, PreconditionViolated, compare_largest, rank_at, seidel_of, seidel_spectrum
from seidelkit.suites import all_graphs


def g(spec):
    return graph_from_string(spec)


def test_search_matches_bruteforce_up_to_order_4():
    for n in range(1, 5):
        for gr in all_graphs(n):
            s = seidel_of(gr)
            lam = seidel_spectrum(s).value
            for preserve in (True, False):
                assert find_extension(s, lam, preserve).witness == find_extension_bruteforce(s, lam, preserve)


def test_witness_is_valid_extension():
    s = seidel_of(g("L(K2,6)"))
    v = find_extension(s, 3, True)
    t = v.extended()
    assert compare_largest(t, 3) == Ordering.EQUAL
    assert rank_at(t, 3) == rank_at(s, 3)
    assert v.witness[0] == 1


def test_irrational_lambda():
    r5 = QuadraticNumber(0, 1, 5)
    assert not find_extension(seidel_of(g("C5+K1")), r5, False).found


def test_precondition():
    with pytest.raises(PreconditionViolated):
        find_extension(seidel_of(g("L(K8)")), 4, True)


def test_budget(monkeypatch):
    with pytest.raises(OutOfBudget):
        find_extension(seidel_of(g("L(K8)")), 3, False, budget=5)
    monkeypatch.setenv("SEIDELKIT_BUDGET", "5")
    with pytest.raises(OutOfBudget):
        is_strongly_maximal(g("L(K8)"))


def test_parallel_agrees():
    for spec in ["L(K2,6)", "L(K5)", "E6"]:
        s = seidel_of(g(spec))
        lam = seidel_spectrum(s).value
        for preserve in (True, False):
            a = find_extension(s, lam, preserve)
            b = find_extension(s, lam, preserve, workers=2, split_depth=2)
            assert a.witness == b.witness


def test_verdict_json_is_deterministic():
    _, v = is_maximal(g("L(K5)"))
    assert v.to_json(with_time=False) == is_maximal(g("L(K5)"))[1].to_json(with_time=False)
    assert "elapsed" in v.to_json()


@pytest.mark.parametrize("spec,maximal,strong", [
    ("L(K8)", True, True), ("L(K5)", True, False), ("L(K2,6)", False, False), ("E3", True, True), ("E4", True, False),
])
def test_verdicts(spec, maximal, strong):
    assert is_maximal(g(spec))[0] == maximal
    assert is_strongly_maximal(g(spec))[0] == strong


def test_lattice_route():
    assert strong_maximality_via_lattice(g("L(K8)")).ok
    assert strong_maximality_via_lattice(g("L(K2,5)")).ok


def test_extendability_criterion():
    r = extendability_criterion(g("T(7)"))
    assert r.ok and r.data["extendable"]
    member = witness_member(g("E4"), is_strongly_maximal(g("E4"))[1].witness)
    assert member.order == 4


def test_lambda_table_small():
    t = lambda_table(5)
    assert [e.n for e in t] == [3, 4, 5]
    assert t[0].value == 2 and t[1].value * t[1].value == 5
    with pytest.raises(OutOfBudget):
        lambda_table(9)


def test_extremal():
    gr, rep = extremal_construction(6)
    assert rep.ok and gr.order == 16
    assert is_switching_equivalent(gr, g("L(K6)+K1")) is not None
    with pytest.raises(InvalidRank):
        extremal_construction(2)


def test_hatk():
    r = hatk_eigenvalue_check(5)
    assert r.ok and not r.data["printed_factor_divides"]
    assert r.data["factorization_holds"]
