"""Command-line front end: ``seidelkit <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import QuadraticNumber
from .graphs import Graph, graph_from_string, is_switching_equivalent, switch
from .lattice import classify, enumerate_roots, lambda_lattice
from .maximality import OutOfBudget, extremal_construction, is_maximal, is_strongly_maximal, lambda_table
from .report import fmt_value, to_jsonable
from .seidel import p_value, rank_at, seidel_of, seidel_spectrum
from .suites import SUITES, run_suite


def _graphs(args) -> list[Graph]:
    out = [graph_from_string(s) for s in args.graph or []]
    out += [Graph.from_graph6(s) for s in args.graph6 or []]
    return out


def _one_graph(args) -> Graph:
    gs = _graphs(args)
    if len(gs) != 1:
        raise SystemExit("error: give exactly one --graph or --graph6")
    return gs[0]


def _emit(args, payload: dict, lines: list[str]) -> None:
    if getattr(args, "json", False):
        print(json.dumps(to_jsonable(payload), indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


def cmd_spectrum(args) -> int:
    g = _one_graph(args)
    sp = seidel_spectrum(g)
    r = rank_at(seidel_of(g), sp.value)
    payload = {"order": g.order, "charpoly": sp.charpoly, "largest": sp.value,
               "multiplicity": sp.largest_multiplicity, "rank": r}
    _emit(args, payload, [
        f"order        {g.order}",
        f"charpoly     {sp.charpoly}",
        f"largest      {fmt_value(sp.value)}",
        f"multiplicity {sp.largest_multiplicity}",
        f"rank         {r}",
    ])
    return 0


def cmd_switch(args) -> int:
    g = _one_graph(args)
    u = [int(x) for x in args.set.split(",") if x.strip()] if args.set else []
    h = switch(g, u)
    _emit(args, {"graph6": h.to_graph6(), "edges": h.edges()}, [h.to_graph6()])
    return 0


def cmd_equiv(args) -> int:
    gs = _graphs(args)
    if len(gs) != 2:
        raise SystemExit("error: equiv needs two graphs")
    cert = is_switching_equivalent(gs[0], gs[1])
    if cert is None:
        _emit(args, {"equivalent": False}, ["not switching equivalent"])
        return 1
    payload = {"equivalent": True, "switched": sorted(cert.switched), "perm": list(cert.perm)}
    _emit(args, payload, [f"switching equivalent: switch {sorted(cert.switched)}, then relabel {list(cert.perm)}"])
    return 0


def cmd_maximal(args) -> int:
    g = _one_graph(args)
    fn = is_strongly_maximal if args.strong else is_maximal
    ok, v = fn(g, workers=args.workers)
    word = "strongly maximal" if args.strong else "maximal"
    payload = {"verdict": ok, "kind": word, "search": v.to_json(with_time=False)}
    lines = [f"{word}: {'yes' if ok else 'no'}", f"largest eigenvalue {fmt_value(v.lam)}", f"nodes {v.nodes}"]
    if v.found:
        lines.append(f"extension signs {''.join('+' if s > 0 else '-' for s in v.witness)}")
    _emit(args, payload, lines)
    return 0


def cmd_p_value(args) -> int:
    g = _one_graph(args)
    theta = QuadraticNumber.parse(args.theta)
    p = p_value(g, theta.a if theta.b == 0 else theta)
    _emit(args, {"theta": theta, "p": p}, [f"p = {fmt_value(p)}" if p is not None else "p undefined (j not in column space)"])
    return 0


def cmd_lattice(args) -> int:
    g = _one_graph(args)
    lat = lambda_lattice(g)
    payload = {"gram": lat.to_json()}
    lines = [lat.dumps()] if not (args.roots or args.classify) else []
    if args.roots or args.classify:
        roots = enumerate_roots(lat)
        payload["root_count"] = len(roots)
        if args.roots:
            lines += [f"{len(roots)} roots", roots.to_text()]
            payload["roots"] = [list(r) for r in roots.roots]
        if args.classify:
            t = classify(lat, roots)
            payload["type"] = str(t)
            lines.append(f"type {t}")
    _emit(args, payload, lines)
    return 0


def cmd_lambda_table(args) -> int:
    rows = lambda_table(args.max_n)
    payload = {"entries": [{"n": e.n, "value": e.value, "minimal_poly": e.minimal_poly,
                            "witness": e.witness_graph.to_graph6()} for e in rows]}
    _emit(args, payload, [f"lambda({e.n}) = {fmt_value(e.value)}   min poly {e.minimal_poly}   witness {e.witness_graph.to_graph6()}"
                          for e in rows])
    return 0


def cmd_extremal(args) -> int:
    g, rep = extremal_construction(args.rank)
    _emit(args, {"graph6": g.to_graph6(), **rep.data},
          [f"rank {args.rank}: {g.order} lines ({rep.data['graph']})", g.to_graph6()])
    return 0 if rep.ok else 1


def cmd_verify(args) -> int:
    rep = run_suite(args.suite)
    print(rep.dumps() if args.json else rep.table())
    return rep.exit_status


def _add_graph_args(p) -> None:
    p.add_argument("--graph", action="append", help="graph spec, e.g. 'L(K8)' or 'C5+K1'")
    p.add_argument("--graph6", action="append", help="graph6 string")
    p.add_argument("--json", action="store_true", help="machine-readable output")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="seidelkit", description="Exact Seidel-matrix and equiangular-line tools")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="characteristic polynomial and largest eigenvalue of S(G)")
    _add_graph_args(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("switch", help="switch G with respect to a vertex set")
    _add_graph_args(p)
    p.add_argument("--set", default="", help="comma-separated vertices")
    p.set_defaults(func=cmd_switch)

    p = sub.add_parser("equiv", help="decide switching equivalence of two graphs")
    _add_graph_args(p)
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("maximal", help="decide maximality by exhaustive extension search")
    _add_graph_args(p)
    p.add_argument("--strong", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_maximal)

    p = sub.add_parser("p-value", help="least t with B_theta^(t) PSD")
    _add_graph_args(p)
    p.add_argument("--theta", required=True, help="rational or a+b*sqrt(d)")
    p.set_defaults(func=cmd_p_value)

    p = sub.add_parser("lattice", help="the lattice spanned by the cone vectors")
    _add_graph_args(p)
    p.add_argument("--roots", action="store_true")
    p.add_argument("--classify", action="store_true")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("lambda-table", help="smallest non-trivial largest eigenvalue per order")
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lambda_table)

    p = sub.add_parser("extremal", help="largest family of lines at angle arccos(1/3) in a given rank")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OutOfBudget as e:
        print(f"error: search budget exhausted ({e}); raise SEIDELKIT_BUDGET", file=sys.stderr)
        return 3
    except (ValueError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
