"""Continuous maps and homeomorphisms of topological graphs, plus edge subdivision."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from grafotop.errors import InputError, InvariantViolation
from grafotop.graph import Graph, connected_components, is_isomorphic
from grafotop.homotopy import TriState, Verdict, default_budget, homotopy_equivalent
from grafotop.library import cartesian_product
from grafotop.topology import (
    SubBasis,
    ValidationReport,
    WeightedNerve,
    fmt_rational,
    indiscrete_topology,
    induced,
    nerve,
    star_topology,
    unit_ball_topology,
    validate,
)


@dataclass
class TopologicalGraph:
    subbasis: SubBasis
    budget: int | None = None
    _report: ValidationReport | None = field(default=None, repr=False)

    @property
    def graph(self) -> Graph:
        return self.subbasis.host

    @property
    def validation(self) -> ValidationReport:
        if self._report is None:
            self._report = validate(self.subbasis, self.budget)
        return self._report

    @property
    def valid(self) -> bool:
        return self.validation.overall is Verdict.YES

    def nerve(self) -> WeightedNerve:
        return nerve(self.subbasis)


@dataclass(frozen=True)
class NerveMap:
    source: WeightedNerve
    target: WeightedNerve
    assignment: Mapping[int, int]

    def to_json(self) -> dict:
        return {
            "assignment": [[k, v] for k, v in sorted(self.assignment.items())],
            "source_weights": [fmt_rational(w) for w in self.source.weights],
            "target_weights": [fmt_rational(w) for w in self.target.weights],
        }


def check_continuous(m: NerveMap) -> bool:
    """Adjacent nodes go to adjacent or equal nodes, and no node gains dimension."""
    src, tgt = m.source, m.target
    if set(m.assignment) != set(src.graph.vertices):
        return False
    if any(v not in tgt.graph.pos for v in m.assignment.values()):
        return False
    for u, v in src.graph.edges:
        a, b = m.assignment[u], m.assignment[v]
        if a != b and not tgt.graph.has_edge(a, b):
            return False
    return all(tgt.weights[m.assignment[a]] <= src.weights[a] for a in src.graph.vertices)


def _require_valid(t: TopologicalGraph, side: str) -> None:
    if not t.valid:
        raise InputError(f"{side} topology is not valid ({t.validation.overall.value}): {list(t.validation.reasons)}")


def check_homeomorphic(a: TopologicalGraph, b: TopologicalGraph) -> NerveMap | None:
    """A weight-preserving isomorphism of the two nerves, or None."""
    _require_valid(a, "first")
    _require_valid(b, "second")
    na, nb = a.nerve(), b.nerve()
    iso = is_isomorphic(na.graph, nb.graph, na.labels, nb.labels)
    if iso is None:
        return None
    if sorted(na.weights) != sorted(nb.weights):
        raise InvariantViolation("homeomorphic nerves with different dimension spectra")
    return NerveMap(na, nb, iso)


# -- equivalence search ---------------------------------------------------------------

STRATEGIES = ("star", "unit_ball", "indiscrete", "optimized_star")


def strategy_topology(g: Graph, name: str, budget: int | None = None) -> SubBasis:
    if name == "star":
        return star_topology(g)
    if name == "unit_ball":
        return unit_ball_topology(g)
    if name == "indiscrete":
        return indiscrete_topology(g)
    if name == "optimized_star":
        from grafotop.optimize import optimize

        return optimize(star_topology(g), search_budget=budget).subbasis
    raise InputError(f"unknown topology strategy {name!r}; known: {', '.join(STRATEGIES)}")


def _candidates(g: Graph, strategies, budget):
    out = []
    for s in strategies:
        if s == "indiscrete" and g.order == 0:
            continue
        try:
            b = strategy_topology(g, s, budget)
        except InputError:
            continue
        t = TopologicalGraph(b, budget)
        if t.valid:
            out.append((s, t))
    return out


def graphs_equivalent(
    g: Graph, h: Graph, strategies: Iterable[str] = STRATEGIES, budget: int | None = None
) -> TriState:
    """Search curated topologies on both graphs for a homeomorphic pair."""
    bud = default_budget() if budget is None else budget
    strategies = tuple(strategies)
    for s in strategies:
        if s not in STRATEGIES:
            raise InputError(f"unknown topology strategy {s!r}")
    ht = homotopy_equivalent(g, h, bud)
    if ht.is_no:
        return TriState(Verdict.NO, f"not homotopic: {ht.reason}", details=ht.details)
    left = _candidates(g, strategies, bud)
    right = _candidates(h, strategies, bud)
    for sa, ta in left:
        for sb, tb in right:
            m = check_homeomorphic(ta, tb)
            if m is not None:
                return TriState(
                    Verdict.YES,
                    f"{sa} and {sb} topologies are homeomorphic",
                    details={
                        "strategies": [sa, sb],
                        "subbasis_a": ta.subbasis.to_json(),
                        "subbasis_b": tb.subbasis.to_json(),
                        "map": m.to_json(),
                    },
                )
    return TriState(
        Verdict.UNKNOWN,
        "no pair of the tried topologies is homeomorphic",
        details={"tried_a": [s for s, _ in left], "tried_b": [s for s, _ in right]},
    )


# -- edge subdivision -------------------------------------------------------------------


def subdivide_edge(g: Graph, e: tuple[int, int]) -> Graph:
    """Insert a new vertex (label one above the current maximum) into edge ``e``."""
    u, v = e
    if not g.has_edge(u, v):
        raise InputError(f"{e} is not an edge")
    m = max(g.vertices) + 1
    edges = [x for x in g.edges if x != (min(u, v), max(u, v))] + [(u, m), (v, m)]
    return Graph((*g.vertices, m), edges)


def _suppress(g: Graph, x: int) -> Graph:
    a, b = sorted(g.neighbors(x))
    edges = [e for e in g.edges if x not in e] + [(a, b)]
    return Graph([v for v in g.vertices if v != x], edges)


def suppressible(g: Graph, x: int) -> bool:
    """Degree two with non-adjacent neighbours: the reverse of a subdivision."""
    if g.degree(x) != 2:
        return False
    a, b = g.neighbors(x)
    return not g.has_edge(a, b)


def suppression_normal_form(g: Graph) -> Graph:
    """Repeatedly undo subdivisions at the lowest suppressible vertex."""
    cur = g
    while True:
        xs = [x for x in cur.vertices if suppressible(cur, x)]
        if not xs:
            return cur
        cur = _suppress(cur, xs[0])


def _cyclomatic(g: Graph) -> int:
    return g.size - g.order + len(connected_components(g))


def _branch_degrees(g: Graph) -> list[int]:
    return sorted(d for d in (g.degree(v) for v in g.vertices) if d != 2)


def _normal_forms(g: Graph, budget: int) -> tuple[list[Graph], bool]:
    """Terminal graphs reachable by suppressions in any order, up to isomorphism."""
    seen: list[Graph] = []
    terminal: list[Graph] = []
    stack = [g]
    steps = 0
    while stack:
        cur = stack.pop()
        if any(is_isomorphic(cur, s) is not None for s in seen if s.size == cur.size and s.order == cur.order):
            continue
        seen.append(cur)
        steps += 1
        if steps > budget:
            return terminal, True
        xs = [x for x in cur.vertices if suppressible(cur, x)]
        if not xs:
            terminal.append(cur)
        stack.extend(_suppress(cur, x) for x in reversed(xs))
    return terminal, False


def is_one_homeomorphic(a: Graph, b: Graph, budget: int | None = None) -> TriState:
    """Can edge subdivisions and their reversals turn ``a`` into ``b``?

    No is certain when the invariants kept by subdivision differ. Yes comes
    with isomorphic suppression normal forms.
    """
    bud = default_budget() if budget is None else budget
    ca, cb = len(connected_components(a)), len(connected_components(b))
    if ca != cb:
        return TriState(Verdict.NO, f"component counts differ: {ca} vs {cb}")
    za, zb = _cyclomatic(a), _cyclomatic(b)
    if za != zb:
        return TriState(Verdict.NO, f"cyclomatic numbers differ: {za} vs {zb}")
    da, db = _branch_degrees(a), _branch_degrees(b)
    if da != db:
        return TriState(Verdict.NO, "degrees other than 2 differ", details={"degrees": [da, db]})
    na, nb = suppression_normal_form(a), suppression_normal_form(b)
    iso = is_isomorphic(na, nb)
    if iso is not None:
        return TriState(Verdict.YES, "normal forms are isomorphic", details={"normal_form": na.to_json()})
    fa, cut_a = _normal_forms(a, bud)
    fb, cut_b = _normal_forms(b, bud)
    for x in fa:
        for y in fb:
            if is_isomorphic(x, y) is not None:
                return TriState(Verdict.YES, "alternative normal forms are isomorphic", details={"normal_form": x.to_json()})
    reason = "search budget exhausted" if cut_a or cut_b else "normal forms are not isomorphic"
    return TriState(Verdict.UNKNOWN, reason)


def _has_triangle(g: Graph) -> bool:
    return any(g.neighbors(u) & g.neighbors(v) for u, v in g.edges)


def chain_normal_form(g: Graph) -> tuple[Graph, dict[tuple[int, int], tuple[int, ...]]]:
    """Suppress degree-2 vertices whose neighbours share no edge and no other neighbour.

    Returns the reduced graph and, for each of its edges, the path of
    ``g``-vertices the edge stands for.
    """
    cur = g
    chains = {e: e for e in g.edges}
    while True:
        for x in cur.vertices:
            if cur.degree(x) != 2:
                continue
            a, b = sorted(cur.neighbors(x))
            if cur.has_edge(a, b) or (cur.neighbors(a) & cur.neighbors(b)) - {x}:
                continue
            pa = chains.pop((min(a, x), max(a, x)))
            pb = chains.pop((min(b, x), max(b, x)))
            pa = pa if pa[-1] == x else pa[::-1]
            pb = pb if pb[0] == x else pb[::-1]
            path = pa + pb[1:]
            chains[(a, b)] = path if path[0] == a else path[::-1]
            cur = _suppress(cur, x)
            break
        else:
            return cur, chains


def subdivision_topology(g: Graph) -> SubBasis:
    """A topology on a triangle-free graph whose nerve is its chain normal form.

    One element per surviving vertex: the vertex with the full chains of all
    its edges. Elements are trees, linked neighbours share a whole chain.
    An isolated chain gives the same element from both ends; it is kept once.
    """
    if _has_triangle(g):
        raise InputError("subdivision topology needs a triangle-free graph")
    nf, chains = chain_normal_form(g)
    els = []
    for x in nf.vertices:
        vs = {x}
        for e, p in chains.items():
            if x in e:
                vs.update(p)
        els.append(induced(vs))
    return SubBasis(g, els, dedupe=True)


# -- products ----------------------------------------------------------------------------


def product_topology_experiment(a: TopologicalGraph, b: TopologicalGraph):
    """Cartesian product graph with the element-wise product family, validated.

    Each product element is the subgraph induced on the product of the two
    vertex sets; star elements contribute their vertex sets.
    """
    _require_valid(a, "first")
    _require_valid(b, "second")
    g, pairs = cartesian_product(a.graph, b.graph)
    label = {p: i for i, p in pairs.items()}
    els = []
    for ea in a.subbasis.elements:
        for eb in b.subbasis.elements:
            els.append(induced(label[(u, v)] for u in ea.vertices for v in eb.vertices))
    pb = SubBasis(g, els, dedupe=True)
    return g, pb, validate(pb, a.budget)


def spectrum(t: TopologicalGraph) -> list[Fraction]:
    return sorted(nerve(t.subbasis).weights)
