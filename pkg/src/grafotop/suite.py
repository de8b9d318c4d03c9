"""Seeded property checks over the builtin corpus and random graphs, as a pass/fail table."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from grafotop import figures
from grafotop.cohomology import betti_vector
from grafotop.errors import InvariantViolation
from grafotop.fixedpoint import fixed_invariant_set, lefschetz_number, nerve_automorphisms
from grafotop.graph import Graph, is_isomorphic, is_path_connected, random_graph
from grafotop.homeo import (
    TopologicalGraph,
    _has_triangle,
    chain_normal_form,
    check_homeomorphic,
    is_one_homeomorphic,
    subdivide_edge,
    subdivision_topology,
)
from grafotop.homotopy import Verdict, homotopy_equivalent
from grafotop.invariants import euler_characteristic
from grafotop.library import corpus, cycle, path, star
from grafotop.topology import indiscrete_topology, is_connected_topological, nerve, star_topology, validate


@dataclass
class CheckResult:
    ident: int
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "id": self.ident,
            "name": self.name,
            "cases": self.cases,
            "status": "pass" if self.passed else "fail",
            "failures": self.failures[:5],
        }


def _random_graphs(rng: random.Random, count: int, n_max: int = 9) -> list[Graph]:
    return [random_graph(rng.randint(1, n_max), rng.choice((0.3, 0.5, 0.7)), rng) for _ in range(count)]


def _relabel(g: Graph, rng: random.Random) -> Graph:
    perm = list(g.vertices)
    rng.shuffle(perm)
    return g.relabel(dict(zip(g.vertices, perm)))


def _homeomorphic_pairs(rng: random.Random):
    """Pairs of valid topological graphs whose nerves match."""
    pairs = [
        (figures.necklace_small_topology(), figures.necklace_large_topology()),
        (figures.c4_windows(), figures.c5_cover()),
        (indiscrete_topology(path(4)), indiscrete_topology(star(5))),
    ]
    for g in _random_graphs(rng, 6, 7):
        pairs.append((star_topology(g), star_topology(_relabel(g, rng))))
    for k in (5, 7, 8):
        pairs.append((subdivision_topology(cycle(k)), subdivision_topology(cycle(k + 3))))
    out = []
    for a, b in pairs:
        ta, tb = TopologicalGraph(a), TopologicalGraph(b)
        m = check_homeomorphic(ta, tb)
        if m is not None:
            out.append((ta, tb, m))
    return out


def _check_existence(res: CheckResult, rng):
    graphs = list(corpus().items()) + [(f"random{i}", g) for i, g in enumerate(_random_graphs(rng, 20))]
    for name, g in graphs:
        res.cases += 1
        b = star_topology(g)
        if validate(b).overall is not Verdict.YES:
            res.failures.append(f"{name}: star topology not valid")
        elif is_isomorphic(nerve(b).graph, g.relabel({v: i for i, v in enumerate(g.vertices)})) is None:
            res.failures.append(f"{name}: nerve differs from host")


def _pair_check(test: Callable) -> Callable:
    def run(res: CheckResult, rng):
        for ta, tb, m in _homeomorphic_pairs(rng):
            res.cases += 1
            msg = test(ta, tb, m)
            if msg:
                res.failures.append(msg)
    return run


def _spectra(ta, tb, m):
    if sorted(nerve(ta.subbasis).weights) != sorted(nerve(tb.subbasis).weights):
        return "spectra differ"


def _homotopic(ta, tb, m):
    v = homotopy_equivalent(ta.graph, tb.graph)
    if v.verdict is Verdict.NO:
        return f"not homotopic: {v.reason}"


def _cohomology(ta, tb, m):
    if betti_vector(ta.graph) != betti_vector(tb.graph):
        return "betti vectors differ"


def _euler(ta, tb, m):
    if euler_characteristic(ta.graph) != euler_characteristic(tb.graph):
        return "euler characteristics differ"


def _check_connected(res: CheckResult, rng):
    for i, g in enumerate(_random_graphs(rng, 40, 10)):
        res.cases += 1
        if is_connected_topological(star_topology(g)) != is_path_connected(g):
            res.failures.append(f"random{i}: connectedness predicates disagree")


def _triangle_free(rng: random.Random, n: int) -> Graph:
    while True:
        g = random_graph(n, 0.35, rng)
        if g.size and not _has_triangle(g):
            return g


def _check_subdivision(res: CheckResult, rng):
    for _ in range(12):
        g = _triangle_free(rng, rng.randint(3, 8))
        h = g
        for _ in range(rng.randint(1, 3)):
            h = subdivide_edge(h, rng.choice(h.edges))
        if is_one_homeomorphic(g, h).verdict is not Verdict.YES:
            continue
        if is_isomorphic(chain_normal_form(g)[0], chain_normal_form(h)[0]) is None:
            continue
        res.cases += 1
        ta, tb = TopologicalGraph(subdivision_topology(g)), TopologicalGraph(subdivision_topology(h))
        if not (ta.valid and tb.valid):
            res.failures.append(f"{g.edges}: subdivision topology not valid")
        elif check_homeomorphic(ta, tb) is None:
            res.failures.append(f"{g.edges}: no homeomorphism after subdivision")


def _check_fixed_sets(res: CheckResult, rng):
    graphs = dict(corpus())
    graphs.pop("pants", None)  # many vertices, only identity-like symmetries
    tops = [(n, star_topology(g)) for n, g in graphs.items()] + [("sun_arcs", figures.sun_arcs())]
    tops.append(("necklace_small", figures.necklace_small_topology()))
    for name, b in tops:
        nv = nerve(b)
        autos = nerve_automorphisms(nv)
        if len(autos) > 48:
            autos = autos[:1] + rng.sample(autos[1:], 47)
        for a in autos:
            res.cases += 1
            try:
                rep = lefschetz_number(nv.graph, a)
                fam = fixed_invariant_set(b, a)
            except InvariantViolation as exc:
                res.failures.append(f"{name}: {exc}")
                continue
            if rep.lefschetz != 0 and fam is None:
                res.failures.append(f"{name}: no invariant family")
            if all(a[v] == v for v in a) and rep.lefschetz != euler_characteristic(nv.graph):
                res.failures.append(f"{name}: identity does not give chi")


CHECKS: dict[int, tuple[str, Callable]] = {
    1: ("star topology exists and its nerve is the host", _check_existence),
    2: ("homeomorphisms keep the dimension spectrum", _pair_check(_spectra)),
    3: ("homeomorphic graphs are homotopic", _pair_check(_homotopic)),
    4: ("homeomorphic graphs share Betti numbers", _pair_check(_cohomology)),
    5: ("homeomorphic graphs share chi", _pair_check(_euler)),
    6: ("topological and path connectedness agree", _check_connected),
    7: ("subdivision-related triangle-free graphs are homeomorphic", _check_subdivision),
    8: ("nonzero Lefschetz number gives an invariant family", _check_fixed_sets),
}


def run_suite(ids=None, seed: int = 0) -> list[CheckResult]:
    ids = sorted(CHECKS) if ids is None else list(ids)
    out = []
    for i in ids:
        name, fn = CHECKS[i]
        res = CheckResult(i, name)
        fn(res, random.Random(seed * 1000 + i))
        out.append(res)
    return out
