"""Command line interface: every operation over JSON/DOT files or builtin graphs.

Exit codes: 0 success, 1 negative or undecided verdict, 2 bad input,
3 an internal identity failed.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from enum import Enum
from fractions import Fraction

from grafotop import figures
from grafotop.errors import InputError, InvariantViolation

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


def _plain(obj):
    """Make results JSON-ready: rationals as "p/q", enums by value, tuples as lists."""
    if isinstance(obj, Fraction):
        return obj.numerator if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if hasattr(obj, "to_json"):
        return _plain(obj.to_json())
    return obj


def _emit(obj, out) -> None:
    out.write(json.dumps(_plain(obj), sort_keys=True) + "\n")


# -- resolving inputs ---------------------------------------------------------------


def _builtin_ref(ref: str):
    from grafotop.library import builtin

    name, _, params = ref.partition(":")
    try:
        nums = [int(p) for p in params.split(",") if p]
    except ValueError:
        raise InputError(f"bad builtin parameters in {ref!r}") from None
    return builtin(name, *nums)


def resolve_graph(ref: str):
    """A file path (JSON or DOT), or a builtin written ``name`` / ``name:3,4,3``."""
    from grafotop.formats import load_graph

    if ref == "-" or os.path.exists(ref):
        return load_graph(ref)
    return _builtin_ref(ref)


def resolve_topology(ref: str):
    """A sub-basis JSON file, a named builtin topology, or ``strategy@graph``."""
    from grafotop.formats import load_subbasis
    from grafotop.homeo import strategy_topology

    if ref == "-" or os.path.exists(ref):
        return load_subbasis(ref)
    if "@" in ref:
        strategy, _, gref = ref.partition("@")
        return strategy_topology(resolve_graph(gref), strategy)
    return figures.subbasis(ref)


def _graph_arg(args):
    if getattr(args, "builtin", None):
        name, *params = args.builtin
        return _builtin_ref(name + ":" + ",".join(params))
    if not args.source:
        raise InputError("give a graph file or --builtin NAME [PARAMS]")
    return resolve_graph(args.source)


def _verdict_code(verdict) -> int:
    return EXIT_OK if getattr(verdict, "value", verdict) == "yes" else EXIT_NEGATIVE


# -- commands -----------------------------------------------------------------------


def cmd_graph(args, out):
    from grafotop.formats import to_dot
    from grafotop.library import builtin_names

    if args.list:
        _emit({"builtins": builtin_names(), "topologies": sorted(figures.FIGURE_SUBBASES)}, out)
        return EXIT_OK
    g = _graph_arg(args)
    if args.format == "dot":
        out.write(to_dot(g))
    else:
        _emit({**g.to_json(), "order": g.order, "size": g.size}, out)
    return EXIT_OK


def cmd_dim(args, out):
    from grafotop.invariants import dimension, local_dimension

    g = _graph_arg(args)
    _emit({"value": dimension(g), "details": {"local": {v: local_dimension(g, v) for v in g.vertices}}}, out)
    return EXIT_OK


def cmd_chi(args, out):
    from grafotop.graph import clique_counts
    from grafotop.invariants import euler_characteristic

    g = _graph_arg(args)
    _emit({"value": euler_characteristic(g), "details": {"clique_counts": clique_counts(g)}}, out)
    return EXIT_OK


def cmd_curvature(args, out):
    from grafotop.invariants import curvature, euler_characteristic, index_expectation

    g = _graph_arg(args)
    k = {v: curvature(g, v) for v in g.vertices}
    details = {"sum": sum(k.values(), Fraction(0)), "chi": euler_characteristic(g)}
    if args.expectation:
        details["index_expectation"] = {v: index_expectation(g, v) for v in g.vertices}
    _emit({"value": k, "details": details}, out)
    return EXIT_OK if details["sum"] == details["chi"] else EXIT_INTERNAL


def cmd_morse(args, out):
    from grafotop.formats import load_json
    from grafotop.invariants import morse_data, poincare_hopf_check, random_injective_function

    g = _graph_arg(args)
    if args.function:
        raw = load_json(args.function)
        if not isinstance(raw, dict):
            raise InputError("function JSON must map vertices to values")
        f = {int(k): v for k, v in raw.items()}
    else:
        f = random_injective_function(g, random.Random(args.seed))
    md = morse_data(g, f)
    rep = poincare_hopf_check(g, f)
    _emit(
        {
            "value": md.index,
            "details": {"function": f, "critical_points": md.critical_points, "sum": rep.sum, "chi": rep.chi},
        },
        out,
    )
    return EXIT_OK if rep.equal else EXIT_INTERNAL


def cmd_betti(args, out):
    from grafotop.cohomology import betti_numbers

    g = _graph_arg(args)
    prof = betti_numbers(g)
    _emit({"value": prof.betti, "details": prof.to_json()}, out)
    return EXIT_OK


def cmd_cohomology(args, out):
    from grafotop.cohomology import (
        betti_numbers,
        d_squared_is_zero,
        dirac_square_is_block_diagonal,
        euler_poincare_check,
        exterior_derivative,
        hodge_nullity,
    )

    g = _graph_arg(args)
    if args.action == "betti":
        prof = betti_numbers(g)
        res = {"value": prof.betti, "details": prof.to_json()}
        if args.matrices:
            res["details"]["d"] = [exterior_derivative(g, k).to_json() for k in range(len(prof.counts))]
        _emit(res, out)
        return EXIT_OK
    prof = betti_numbers(g)
    ep = euler_poincare_check(g)
    hodge = [hodge_nullity(g, k) for k in range(len(prof.counts))]
    checks = {
        "d_squared_zero": d_squared_is_zero(g),
        "dirac_square_block_diagonal": dirac_square_is_block_diagonal(g),
        "euler_poincare": ep.equal,
        "hodge_matches_betti": hodge == list(prof.betti) + [0] * (len(hodge) - len(prof.betti)),
    }
    _emit({"value": all(checks.values()), "details": {**checks, "hodge_nullities": hodge}}, out)
    return EXIT_OK if all(checks.values()) else EXIT_INTERNAL


def cmd_homotopy(args, out):
    from grafotop.homotopy import collapse, homotopy_equivalent, is_contractible

    budget = args.budget
    if args.action == "collapse":
        g = resolve_graph(args.graphs[0])
        core, trace = collapse(g, budget)
        _emit({"value": core.to_json(), "details": {"trace": trace.to_json()}}, out)
        return EXIT_OK
    if args.action == "contractible":
        t = is_contractible(resolve_graph(args.graphs[0]), budget)
        _emit(t, out)
        return _verdict_code(t.verdict)
    if len(args.graphs) != 2:
        raise InputError("equivalent needs two graphs")
    t = homotopy_equivalent(resolve_graph(args.graphs[0]), resolve_graph(args.graphs[1]), budget)
    _emit(t, out)
    return _verdict_code(t.verdict)


def cmd_topo(args, out):
    from grafotop.optimize import optimize
    from grafotop.topology import dimension_summary, nerve, validate

    b = resolve_topology(args.topology)
    if args.action == "validate":
        rep = validate(b, args.budget)
        _emit(rep, out)
        return _verdict_code(rep.overall)
    if args.action == "nerve":
        _emit(nerve(b), out)
        return EXIT_OK
    if args.action == "summary":
        _emit(dimension_summary(b), out)
        return EXIT_OK
    res = optimize(b, budget=args.steps, search_budget=args.budget)
    _emit(res, out)
    return EXIT_OK


def cmd_homeo(args, out):
    from grafotop.homeo import (
        TopologicalGraph,
        check_homeomorphic,
        graphs_equivalent,
        is_one_homeomorphic,
        product_topology_experiment,
        subdivide_edge,
    )

    if args.action == "check":
        a, b = (TopologicalGraph(resolve_topology(r), args.budget) for r in args.inputs[:2])
        m = check_homeomorphic(a, b)
        _emit({"verdict": "yes" if m else "no", "map": m}, out)
        return EXIT_OK if m else EXIT_NEGATIVE
    if args.action == "equivalent":
        t = graphs_equivalent(resolve_graph(args.inputs[0]), resolve_graph(args.inputs[1]), budget=args.budget)
        _emit(t, out)
        return _verdict_code(t.verdict)
    if args.action == "one":
        t = is_one_homeomorphic(resolve_graph(args.inputs[0]), resolve_graph(args.inputs[1]), args.budget)
        _emit(t, out)
        return _verdict_code(t.verdict)
    if args.action == "product":
        a, b = (TopologicalGraph(resolve_topology(r), args.budget) for r in args.inputs[:2])
        g, pb, rep = product_topology_experiment(a, b)
        _emit({"verdict": rep.overall, "graph": g.to_json(), "subbasis": pb, "validation": rep}, out)
        return _verdict_code(rep.overall)
    # subdivide
    if args.edge is None:
        raise InputError("subdivide needs --edge U V")
    g = subdivide_edge(resolve_graph(args.inputs[0]), tuple(args.edge))
    _emit(g.to_json(), out)
    return EXIT_OK


def cmd_fix(args, out):
    from grafotop.fixedpoint import fixed_invariant_set, lefschetz_number, nerve_automorphisms
    from grafotop.formats import load_json
    from grafotop.topology import nerve

    if args.action == "lefschetz":
        g = resolve_graph(args.input)
        if args.map:
            raw = load_json(args.map)
            if isinstance(raw, list):
                f = {int(a): int(b) for a, b in raw}
            elif isinstance(raw, dict):
                f = {int(a): int(b) for a, b in raw.items()}
            else:
                raise InputError("map JSON must be an object or a list of pairs")
        else:
            f = {v: v for v in g.vertices}
        _emit(lefschetz_number(g, f), out)
        return EXIT_OK
    b = resolve_topology(args.input)
    autos = nerve_automorphisms(nerve(b))
    if not 0 <= args.auto < len(autos):
        raise InputError(f"--auto must be in 0..{len(autos) - 1}")
    a = autos[args.auto]
    rep = lefschetz_number(nerve(b).graph, a)
    fam = fixed_invariant_set(b, a)
    _emit({"automorphism": a, "lefschetz": rep, "invariant": fam, "automorphism_count": len(autos)}, out)
    return EXIT_OK if fam is not None else EXIT_NEGATIVE


def cmd_suite(args, out):
    from grafotop.suite import CHECKS, run_suite

    try:
        ids = [int(x) for x in args.theorems.split(",") if x] if args.theorems else None
    except ValueError:
        raise InputError("--theorems takes comma separated integers") from None
    if ids and any(i not in CHECKS for i in ids):
        raise InputError(f"known check ids: {sorted(CHECKS)}")
    results = run_suite(ids, args.seed)
    _emit({"seed": args.seed, "results": results, "all_pass": all(r.passed for r in results)}, out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_NEGATIVE


# -- parser -------------------------------------------------------------------------


def _add_graph_source(p):
    p.add_argument("source", nargs="?", help="graph file (JSON or DOT) or builtin name[:params]")
    p.add_argument("--builtin", nargs="+", metavar="NAME", help="builtin graph and its integer parameters")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="grafotop", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graph", help="show a graph or list builtins")
    _add_graph_source(p)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_graph)

    for name, fn, text in (
        ("dim", cmd_dim, "inductive dimension"),
        ("chi", cmd_chi, "Euler characteristic"),
        ("betti", cmd_betti, "Betti numbers"),
    ):
        p = sub.add_parser(name, help=text)
        _add_graph_source(p)
        p.set_defaults(func=fn)

    p = sub.add_parser("curvature", help="curvature at every vertex")
    _add_graph_source(p)
    p.add_argument("--expectation", action="store_true", help="also report index expectations")
    p.set_defaults(func=cmd_curvature)

    p = sub.add_parser("morse", help="Poincare-Hopf indices of an injective function")
    _add_graph_source(p)
    p.add_argument("--function", help="JSON object vertex -> value")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_morse)

    p = sub.add_parser("cohomology", help="Betti numbers or identity checks")
    p.add_argument("action", choices=("betti", "check"))
    _add_graph_source(p)
    p.add_argument("--matrices", action="store_true")
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("homotopy", help="collapse, contractibility and equivalence")
    p.add_argument("action", choices=("collapse", "contractible", "equivalent"))
    p.add_argument("graphs", nargs="+")
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=cmd_homotopy)

    p = sub.add_parser("topo", help="sub-basis validation, nerve, summary, optimization")
    p.add_argument("action", choices=("validate", "nerve", "summary", "optimize"))
    p.add_argument("topology", help="sub-basis JSON, builtin topology name, or strategy@graph")
    p.add_argument("--budget", type=int, default=None, help="homotopy search budget")
    p.add_argument("--steps", type=int, default=2000, help="optimizer evaluation budget")
    p.set_defaults(func=cmd_topo)

    p = sub.add_parser("homeo", help="homeomorphism and equivalence checks")
    p.add_argument("action", choices=("check", "equivalent", "one", "product", "subdivide"))
    p.add_argument("inputs", nargs="+")
    p.add_argument("--edge", type=int, nargs=2, metavar=("U", "V"))
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=cmd_homeo)

    p = sub.add_parser("fix", help="Lefschetz numbers and invariant element families")
    p.add_argument("action", choices=("lefschetz", "invariant"))
    p.add_argument("input")
    p.add_argument("--map", help="automorphism JSON (object or list of pairs)")
    p.add_argument("--auto", type=int, default=0, help="index into the nerve automorphism list")
    p.set_defaults(func=cmd_fix)

    p = sub.add_parser("suite", help="run the seeded property checks")
    p.add_argument("--theorems", default=None, help="comma separated check ids (default all)")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_suite)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    need = {"homotopy", "topo", "homeo"}
    if args.command in need and args.action in ("equivalent", "check", "product", "one") and len(
        getattr(args, "inputs", getattr(args, "graphs", []))
    ) < 2:
        parser.error(f"{args.command} {args.action} needs two inputs")
    try:
        return args.func(args, out)
    except InputError as exc:
        _emit({"error": str(exc), "kind": "input"}, out)
        return EXIT_INPUT
    except InvariantViolation as exc:
        _emit({"error": str(exc), "kind": "invariant"}, out)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
