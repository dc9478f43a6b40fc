"""Named verification suites.  Every suite is deterministic (fixed seeds, no
timings in the records) so two runs produce identical JSON."""

from __future__ import annotations

import functools
import itertools
import random
from fractions import Fraction
from typing import Callable

from .algebra import (
    FieldSymMatrix,
    IntPoly,
    QuadraticNumber,
    char_poly,
    field_rank,
    isolate_real_roots,
    psd_status,
    yun_decomposition,
)
from .graphs import Graph, graph_from_string, is_switching_equivalent, switch
from .lattice import (
    RootLatticeType,
    admissible_pairs,
    cartan_lattice,
    classify,
    enumerate_roots,
    lambda_lattice,
    random_class_rep,
    root_count,
    standard_roots,
    switching_class_rep,
)
from .maximality import (
    containment_spotcheck,
    extendability_criterion,
    extremal_construction,
    find_extension,
    find_extension_bruteforce,
    hatk_eigenvalue_check,
    is_maximal,
    is_strongly_maximal,
    lambda_table,
    strong_maximality_via_lattice,
)
from .report import SuiteReport
from .seidel import (
    Ordering,
    b_matrix,
    compare_largest,
    cone_equivalence_check,
    extension_spectrum_check,
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

__all__ = ["SUITES", "UnknownSuite", "run_suite", "all_graphs"]


class UnknownSuite(KeyError):
    pass


def all_graphs(n: int):
    pairs = list(itertools.combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if code >> i & 1])


def _random_graph(rng: random.Random, n: int) -> Graph:
    return Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.5])


def _random_subset(rng: random.Random, n: int) -> list[int]:
    return [v for v in range(n) if rng.random() < 0.5]


def _g(spec: str) -> Graph:
    return graph_from_string(spec)


# ---------------------------------------------------------------------------


MAXIMAL_LIST = [
    ("L(K5)", 5), ("L(K2,4)", 5), ("L(K6)+K1", 6), ("L(K2,5)", 6), ("L(K8)", 7),
    ("L(K2,2)", 3), ("L(K2,3)", 4), ("L(K2,7)", 8), ("L(K2,8)", 9),
]


def suite_theorem3(rep: SuiteReport) -> None:
    anchor = "maximal graphs with largest Seidel eigenvalue 3"
    for spec, corank in MAXIMAL_LIST:
        g = _g(spec)
        s = seidel_of(g)
        sp = seidel_spectrum(s)
        ok_eig = sp.value == 3 and g.order - sp.largest_multiplicity == corank
        m, v = is_maximal(s)
        rep.add(f"maximal.{spec}", anchor, m and ok_eig, n_minus_m=g.order - sp.largest_multiplicity, nodes=v.nodes)
    g = _g("L(K2,6)")
    m, v = is_maximal(g)
    rep.add("maximal.L(K2,6)", "rank 7 is attained maximally only by L(K8)", not m, witness=v.witness)
    strong_anchor = "strongly maximal with eigenvalue 3 only for L(K8)"
    for spec in ["L(K8)", "L(K5)", "L(K6)+K1"] + [f"L(K2,{m})" for m in range(2, 9)]:
        sm, v = is_strongly_maximal(_g(spec))
        rep.add(f"strong.{spec}", strong_anchor, sm == (spec == "L(K8)"), strongly_maximal=sm)
    for spec in ["L(K8)", "L(K2,6)", "L(K2,7)", "L(K5)", "L(K6)+K1"]:
        r = strong_maximality_via_lattice(_g(spec))
        rep.add(f"lattice_route.{spec}", "maximality through root lattice containment", r.ok, **r.data)


def suite_corollary13(rep: SuiteReport) -> None:
    expected = {3: 4, 4: 6, 5: 10, 6: 16, 7: 28, 8: 14, 9: 16}
    for r in range(3, 10):
        _, report = extremal_construction(r)
        ok = report.ok and report.data["order"] == expected[r]
        rep.add(f"extremal.r{r}", "maximum number of equiangular lines at angle arccos(1/3) and rank r", ok, **report.data)


EXPECTED_LAMBDA = {
    3: IntPoly((-2, 1)),
    4: IntPoly((-5, 0, 1)),
    5: IntPoly((-5, 0, 1)),
    6: IntPoly((-5, 0, 1)),
    7: IntPoly((-14, 3, 1)),
}


def suite_lambda_table(rep: SuiteReport) -> None:
    table = lambda_table(7)
    anchor = "minimum largest Seidel eigenvalue over non-complete classes"
    for e in table:
        ok = e.minimal_poly == EXPECTED_LAMBDA[e.n] and e.witness_graph.order == e.n
        ok = ok and compare_largest(seidel_of(e.witness_graph), e.value) == Ordering.EQUAL
        rep.add(f"lambda.{e.n}", anchor, ok, value=e.value, minimal_poly=e.minimal_poly,
                witness=e.witness_graph.to_graph6(), classes_by_charpoly=e.classes)
    mono = all(compare_largest(seidel_of(b.witness_graph), a.value) != Ordering.LESS for a, b in zip(table, table[1:]))
    rep.add("lambda.monotone", "lambda(n) is weakly increasing", mono)


def _theta_of(s):
    lam = seidel_spectrum(s).value
    return lam, (lam + 1) / 2


BOUND_GRAPHS = [("E3", 2), ("C5+K1", 3), ("L(K8)", 7)]


def suite_absolute_bound(rep: SuiteReport) -> None:
    rng = random.Random(2021)
    for spec, r_expected in BOUND_GRAPHS:
        g = _g(spec)
        s = seidel_of(g)
        lam, theta = _theta_of(s)
        r = rank_at(s, lam)
        rep.add(f"attains.{spec}", "absolute bound n = r(r+1)/2", r == r_expected and g.order == r * (r + 1) // 2,
                n=g.order, r=r, lam=lam)
        bad = 0
        for _ in range(50):
            h = switch(g, _random_subset(rng, g.order))
            a = field_rank(FieldSymMatrix.shifted(h.adjacency_matrix(), theta, scale=1))
            if field_rank(b_matrix(h, theta, 2)) != a:
                bad += 1
        rep.add(f"rank_equal.{spec}", "rank B_theta(H) = rank(A(H) + theta I) at the absolute bound", bad == 0,
                switches=50, failures=bad)
    specs = ["E3", "C5+K1", "L(K8)", "L(K5)", "L(K6)+K1", "T(7)", "Paley(13)+K1", "Paley(5)+K1"] + [
        f"L(K2,{m})" for m in range(2, 9)
    ] + [f"E{n}" for n in range(2, 10)] + [f"hatK({n})" for n in range(2, 13)]
    worst = []
    for spec in specs:
        s = seidel_of(_g(spec))
        lam = seidel_spectrum(s).value
        if compare_largest(s, 1) != Ordering.GREATER:
            continue  # eigenvalue 1: the lines coincide, no bound applies
        r = rank_at(s, lam)
        if s.order > r * (r + 1) // 2:
            worst.append(spec)
    rep.add("bound.all", "n <= r(r+1)/2 on every named graph", not worst, checked=len(specs), violations=worst)


def suite_section4(rep: SuiteReport) -> None:
    # exhaustive equivalence and rank identities, theta = 2, order <= 5
    for n in range(1, 6):
        bad_b, bad_c, count = 0, 0, 0
        for g in all_graphs(n):
            count += 1
            if not bordered_psd_check(g, 2).ok:
                bad_b += 1
            if not cone_equivalence_check(g).ok:
                bad_c += 1
        rep.add(f"psd_equivalence.n{n}", "largest eigenvalue <= 2theta-1 iff B_theta PSD, with rank identity",
                bad_b == 0, graphs=count, failures=bad_b)
        rep.add(f"cone_equivalence.n{n}", "largest eigenvalue <= 3 iff the cone has least eigenvalue >= -2",
                bad_c == 0, graphs=count, failures=bad_c)
    sr_anchor = "switching root from a main eigenvector"
    r = switching_root_check(_g("E3"), Fraction(3, 2))
    rep.add("switching_root.E3", sr_anchor, r.ok and r.outcome == "SwitchingRoot", **r.data)
    half = (1 + QuadraticNumber(0, 1, 5)) / 2
    r = switching_root_check(_g("C5+K1"), half)
    rep.add("switching_root.C5+K1", sr_anchor, r.ok and r.outcome == "SwitchingRoot", **r.data)
    r = switching_root_check(_g("T(5)"), 2)
    rep.add("switching_root.T(5)", sr_anchor, r.outcome == "NoMainEigenvector", **r.data)
    r = switching_root_check(_g("L(K8)"), 2)
    rep.add("switching_root.L(K8)", sr_anchor, r.ok, **r.data)
    tw = two_eigenvalue_params(seidel_of(_g("L(K8)")))
    rep.add("two_eigenvalues.L(K8)", "regular two-graph relations",
            (tw.lam, tw.mu, tw.m_lam, tw.m_mu) == (3, -9, 21, 7) and -tw.lam * tw.mu == 27, params=tw.__dict__)
    tw = two_eigenvalue_params(seidel_of(_g("C5+K1")))
    rep.add("two_eigenvalues.C5+K1", "regular two-graph relations",
            tw is not None and tw.lam * tw.lam == 5 and tw.m_lam == tw.m_mu == 3, params=tw.__dict__)
    sp = srg_params(_g("T(5)"))
    rep.add("srg.T(5)", "strongly regular parameters", sp is not None and (sp.n, sp.k, sp.a, sp.c) == (10, 6, 3, 4))


REGULAR_SET = ["L(K8)", "T(7)", "L(K5)", "C5", "K2,2", "K3,3", "K4,4", "T(5)"] + [f"L(K2,{m})" for m in (2, 3, 4, 5)]


def suite_section5(rep: SuiteReport) -> None:
    t7 = _g("T(7)")
    p = p_value(t7, 2)
    rep.add("p.T(7)", "p(T(7)) = 7/4", p == Fraction(7, 4), p=p)
    sp = srg_params(t7)
    rep.add("srg.T(7)", "T(7) is strongly regular (21, 10, 5, 4)", sp is not None and (sp.n, sp.k, sp.a, sp.c) == (21, 10, 5, 4))
    crit = extendability_criterion(t7)
    rep.add("extendable.T(7)", "T(7) is extendable although p > 2 - 1/theta",
            crit.ok and crit.data["extendable"] and crit.data["p_of_G"] > crit.data["threshold"], **crit.data)
    for spec in ["E3", "C5+K1"]:
        crit = extendability_criterion(_g(spec))
        rep.add(f"strong.{spec}", "strongly maximal for eigenvalues 2 and sqrt(5)",
                crit.ok and not crit.data["extendable"], **crit.data)
    for t in (2, 3):
        crit = extendability_criterion(_g(f"K{t},{t}"))
        rep.add(f"regular_condition.K{t},{t}", "n/(k+theta) <= 2 - 1/theta gives extendability",
                crit.ok and crit.data["extendable"] and crit.data["regular_condition_fires_on_G"], **crit.data)
    # uniqueness at eigenvalues 2 and sqrt(5): strongly maximal classes of
    # order <= 6 (each represented with an isolated vertex)
    targets = {2: _g("E3"), 5: _g("C5+K1")}
    bad, found = [], {2: 0, 5: 0}
    for n in range(2, 7):
        seen: set = set()
        for g in all_graphs(n - 1):
            h = g + Graph(1)
            s = seidel_of(h)
            key = char_poly(s.rows).coeffs
            lam = seidel_spectrum(s).value
            sq = lam * lam
            if sq not in (4, 5) or (sq == 4 and lam != 2):
                continue
            if (key, h.to_graph6()) in seen:
                continue
            seen.add((key, h.to_graph6()))
            sm, _ = is_strongly_maximal(s)
            if sm:
                found[2 if sq == 4 else 5] += 1
                if is_switching_equivalent(h, targets[2 if sq == 4 else 5]) is None:
                    bad.append(h.to_graph6())
    rep.add("strong_unique.small", "strongly maximal at eigenvalue 2 or sqrt(5) means K3-bar or C5+K1",
            not bad and found[2] > 0 and found[5] > 0, strongly_maximal_found=found, others=bad)
    bad = []
    for spec in REGULAR_SET:
        g = _g(spec)
        k = g.degrees()[0]
        for theta in (2, 3):
            if not psd_status(FieldSymMatrix.shifted(g.adjacency_matrix(), theta, scale=1)).psd:
                continue
            if p_value(g, theta) != Fraction(g.order) / (k + theta):
                bad.append((spec, theta))
    rep.add("p_regular", "p(G) = n/(k+theta) for regular G", not bad, checked=REGULAR_SET, failures=bad)


def suite_section6(rep: SuiteReport) -> None:
    extensions = []
    for n in range(2, 10):
        g = _g(f"E{n}")
        sm, v = is_strongly_maximal(g)
        rep.add(f"empty.E{n}", "empty graph extendable iff order even", (not sm) == (n % 2 == 0), witness=v.witness)
        if v.found:
            extensions.append((f"E{n}", v))
    for q in (5, 13):
        g = _g(f"Paley({q})+K1")
        sp = seidel_spectrum(g)
        tw = two_eigenvalue_params(seidel_of(g))
        ok = sp.value * sp.value == q and sp.largest_multiplicity == (q + 1) // 2 and tw is not None
        rep.add(f"paley.spectrum.{q}", "P(q)+K1 has spectrum +-sqrt(q) each (q+1)/2 times", ok,
                largest=sp.value, multiplicity=sp.largest_multiplicity)
        sm, v = is_strongly_maximal(g)
        irrational = tw is not None and not isinstance(tw.lam, Fraction)
        rep.add(f"paley.strong.{q}", "two irrational eigenvalues force strong maximality", sm and irrational,
                search=sm, irrational_two_eigenvalues=irrational)
    for n in range(2, 13):
        r = hatk_eigenvalue_check(n)
        rep.add(f"hatk.{n}", "largest eigenvalue of K_n plus pendant in (3 - 4/n, 3)", r.ok, **r.data)
    # spectra of extensions of two-eigenvalue matrices
    for spec in ["E2", "L(K2,2)", "K3,3", "T(5)", "L(K5)", "L(K6)+K1", "Paley(5)+K1"]:
        g = _g(spec)
        if two_eigenvalue_params(seidel_of(g)) is None:
            continue
        sm, v = is_strongly_maximal(g)
        if v.found and spec not in dict(extensions):
            extensions.append((spec, v))
    for spec, v in extensions:
        r = extension_spectrum_check(v.seidel, v.witness)
        rep.add(f"extension_spectrum.{spec}", "theta + tau = mu and theta*tau = -n on extensions", r.ok, **r.data)
    r = containment_spotcheck(8)
    rep.add("containment.8", "K_hat(ceil(n/2)) inside every class with eigenvalue in (1, 3)", r.ok, **r.data)


def suite_lattice_sc(rep: SuiteReport) -> None:
    names = {("A", n): (f"K{n - 1}" if n > 1 else "E0") for n in range(2, 9)}
    names.update({("D", n): f"L(K2,{n - 2})" for n in range(4, 9)})
    names.update({("E", 6): "L(K5)", ("E", 7): "L(K6)+K1", ("E", 8): "L(K8)"})
    for (fam, n), spec in sorted(names.items()):
        t = RootLatticeType(fam, n)
        rep_g = switching_class_rep(t)
        eq = is_switching_equivalent(rep_g, _g(spec)) is not None
        rep.add(f"class.{t}", "switching class of each irreducible root lattice", eq, named=spec, order=rep_g.order)
    for n in (6, 7, 8):
        t = RootLatticeType("E", n)
        lat = lambda_lattice(_g(names[("E", n)]))
        roots = enumerate_roots(lat)
        cls = classify(lat, roots)
        rep.add(f"roots.E{n}", "root counts 72 / 126 / 240", len(roots) == root_count(t) and cls == t,
                roots=len(roots), type=str(cls))
    for fam, ranks in (("A", range(1, 9)), ("D", range(4, 9)), ("E", (6, 7, 8))):
        for n in ranks:
            t = RootLatticeType(fam, n)
            a = len(standard_roots(t))
            b = len(enumerate_roots(cartan_lattice(t)))
            rep.add(f"standard.{t}", "standard and enumerated root counts agree", a == b == root_count(t), standard=a, enumerated=b)
    pairs = admissible_pairs(RootLatticeType("E", 8))
    rep.add("e8.pairs", "56 roots at inner product 1 with j/2, in 28 pairs", len(pairs) == 28 and len({x for p in pairs for x in p}) == 56)
    rng = random.Random(7)
    base = switching_class_rep(RootLatticeType("E", 8))
    ok = all(is_switching_equivalent(random_class_rep(RootLatticeType("E", 8), rng), base) is not None for _ in range(3))
    rep.add("e8.choice_of_x", "the class does not depend on the admissible set", ok, samples=3)
    rng = random.Random(11)
    bad = []
    for spec in ["L(K8)", "L(K5)", "L(K6)+K1", "L(K2,4)", "C5", "K4"]:
        g = _g(spec)
        t = classify(lambda_lattice(g))
        for _ in range(3):
            h = switch(g, _random_subset(rng, g.order))
            if classify(lambda_lattice(h)) != t:
                bad.append(spec)
    rep.add("lambda.switching_invariant", "type of Lambda(G) is a switching invariant", not bad, failures=bad)
    rep.add("e7.prose_label", "E7 class is L(K6)+K1, not L(K7)",
            is_switching_equivalent(switching_class_rep(RootLatticeType("E", 7)), _g("L(K6)+K1")) is not None
            and _g("L(K7)").order != 16,
            note="the admissible set has 16 roots, so L(K7) with 21 vertices cannot be the class")
    km = seidel_spectrum(_g("K6"))
    rep.add("complete.spectrum", "S(K_m) has largest eigenvalue 1 with multiplicity m - 1",
            km.value == 1 and km.largest_multiplicity == 5,
            note="1 has multiplicity m - 1 and 1 - m is simple; the reverse assignment is a known misprint")


def _sorted_roots(p: IntPoly) -> list:
    out = []
    for mult, factor in enumerate(yun_decomposition(p.as_fractions()), start=1):
        for r in isolate_real_roots(factor):
            out.extend([r] * mult)
    return sorted(out, key=functools.cmp_to_key(lambda a, b: a.compare(b)), reverse=True)


def interlaces(big: IntPoly, small: IntPoly) -> bool:
    a, b = _sorted_roots(big), _sorted_roots(small)
    if len(a) != len(b) + 1:
        return False
    return all(a[i + 1].compare(b[i]) <= 0 <= a[i].compare(b[i]) for i in range(len(b)))


def suite_parity(rep: SuiteReport) -> None:
    count = bad = 0
    for n in range(0, 6):
        for g in all_graphs(n):
            count += 1
            bad += not parity_check(seidel_of(g))
    rep.add("parity.exhaustive", "char poly of S mod 2", bad == 0, matrices=count, failures=bad)
    rng = random.Random(5)
    bad = sum(not parity_check(seidel_of(_random_graph(rng, rng.randint(6, 10)))) for _ in range(100))
    rep.add("parity.random", "char poly of S mod 2", bad == 0, matrices=100, failures=bad)
    rng = random.Random(6)
    bad = 0
    for _ in range(200):
        n = rng.randint(2, 8)
        s = seidel_of(_random_graph(rng, n))
        k = rng.randrange(n)
        sub = s.principal([i for i in range(n) if i != k])
        bad += not interlaces(char_poly(s.rows), char_poly(sub.rows))
    rep.add("interlacing", "principal submatrix eigenvalues interlace", bad == 0, instances=200, failures=bad)
    count = bad = 0
    for n in range(1, 6):
        for g in all_graphs(n):
            s = seidel_of(g)
            lam = seidel_spectrum(s).value
            for pr in (True, False):
                count += 1
                if find_extension(s, lam, pr).witness != find_extension_bruteforce(s, lam, pr):
                    bad += 1
    rep.add("search_vs_bruteforce", "extension search agrees with exhaustive sign enumeration", bad == 0,
            queries=count, failures=bad)
    rng = random.Random(8)
    bad_spec = bad_verdict = 0
    for i in range(200):
        n = rng.randint(2, 8)
        g = _random_graph(rng, n)
        h = switch(g, _random_subset(rng, n))
        if char_poly(seidel_of(g).rows) != char_poly(seidel_of(h).rows):
            bad_spec += 1
        if n <= 6:
            a = (is_maximal(g)[0], is_strongly_maximal(g)[0])
            b = (is_maximal(h)[0], is_strongly_maximal(h)[0])
            if a != b or (a[1] and not a[0]):
                bad_verdict += 1
    rep.add("switching_invariance.spectrum", "switching preserves the Seidel spectrum", bad_spec == 0, pairs=200)
    rep.add("switching_invariance.verdicts", "switching preserves maximality verdicts", bad_verdict == 0, failures=bad_verdict)


SUITES: dict[str, Callable[[SuiteReport], None]] = {
    "theorem3": suite_theorem3,
    "corollary13": suite_corollary13,
    "lambda-table": suite_lambda_table,
    "absolute-bound": suite_absolute_bound,
    "section4": suite_section4,
    "section5": suite_section5,
    "section6": suite_section6,
    "lattice-sc": suite_lattice_sc,
    "parity": suite_parity,
}


def run_suite(name: str) -> SuiteReport:
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))}")
    rep = SuiteReport(name)
    SUITES[name](rep)
    return rep
