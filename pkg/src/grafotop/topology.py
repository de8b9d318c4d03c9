"""Sub-bases, their nerves, and the axioms of a graph topology.

A sub-basis element is a vertex set, read either as the induced subgraph or,
for star elements, as the edges from a center to the other listed vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from grafotop.errors import InputError
from grafotop.graph import Graph, connected_components, vertex_set
from grafotop.homotopy import (
    TriState,
    _mask_status,
    Verdict,
    contractible_subgraph,
    default_budget,
    homotopy_equivalent,
    is_contractible,
)
from grafotop.invariants import dim_of_mask, dimension, local_dimension


@dataclass(frozen=True)
class Element:
    vertices: tuple[int, ...]
    star_center: int | None = None

    @property
    def is_star(self) -> bool:
        return self.star_center is not None

    def sort_key(self):
        return (len(self.vertices), self.vertices, -1 if self.star_center is None else self.star_center)

    def to_json(self) -> dict:
        mode = "induced" if self.star_center is None else {"star": self.star_center}
        return {"vertices": list(self.vertices), "mode": mode}

    def __str__(self):
        s = "(" + ",".join(map(str, self.vertices)) + ")"
        return s if self.star_center is None else f"star{self.star_center}{s}"


def induced(vertices: Iterable[int]) -> Element:
    return Element(vertex_set(vertices))


def star_element(g: Graph, x: int) -> Element:
    return Element(vertex_set((x, *g.neighbors(x))), x)


class SubBasis:
    """A host graph with an ordered, duplicate-free family of elements."""

    __slots__ = ("host", "elements")

    def __init__(self, host: Graph, elements: Sequence[Element], dedupe: bool = False):
        seen = set()
        kept = []
        for el in elements:
            if not isinstance(el, Element):
                el = induced(el)
            _check_element(host, el)
            if el in seen:
                if dedupe:
                    continue
                raise InputError(f"duplicate sub-basis element {el}")
            seen.add(el)
            kept.append(el)
        self.host = host
        self.elements = tuple(kept)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return isinstance(other, SubBasis) and self.host == other.host and self.elements == other.elements

    def __hash__(self):
        return hash((self.host, self.elements))

    def __repr__(self):
        return f"SubBasis({', '.join(map(str, self.elements))})"

    def canonical(self) -> tuple:
        return tuple(sorted((e.sort_key() for e in self.elements)))

    def replace(self, elements: Sequence[Element]) -> SubBasis:
        return SubBasis(self.host, elements)

    def to_json(self) -> dict:
        return {"graph": self.host.to_json(), "elements": [e.to_json() for e in self.elements]}


def _check_element(host: Graph, el: Element) -> None:
    if not el.vertices:
        raise InputError("sub-basis elements must be nonempty")
    if list(el.vertices) != sorted(set(el.vertices)):
        raise InputError(f"element vertices must be sorted and distinct: {el.vertices}")
    for v in el.vertices:
        host.check_vertex(v)
    if el.star_center is not None:
        c = el.star_center
        if c not in el.vertices:
            raise InputError(f"star center {c} is not among the element's vertices")
        nb = host.neighbors(c)
        bad = [v for v in el.vertices if v != c and v not in nb]
        if bad:
            raise InputError(f"star at {c} lists non-neighbours {bad}")


# -- element geometry ------------------------------------------------------------


def element_graph(host: Graph, el: Element) -> Graph:
    if el.star_center is None:
        return host.induced_by_mask(host.mask(el.vertices))
    c = el.star_center
    return Graph(el.vertices, ((c, v) if c < v else (v, c) for v in el.vertices if v != c))


def element_edges(host: Graph, el: Element) -> frozenset:
    if el.star_center is None:
        vs = set(el.vertices)
        return frozenset(e for e in host.edges if e[0] in vs and e[1] in vs)
    c = el.star_center
    return frozenset((c, v) if c < v else (v, c) for v in el.vertices if v != c)


def _memo(host: Graph, name: str) -> dict:
    return host._cache.setdefault(name, {})


def _graph_facts(host: Graph, g: Graph, budget: int):
    """(dimension, contractibility) of a graph that is not an induced subgraph of ``host``."""
    memo = _memo(host, "free_graph_facts")
    got = memo.get(g)
    if got is None:
        got = (dimension(g), is_contractible(g, budget).verdict)
        memo[g] = got
    return got


def element_dimension(host: Graph, el: Element) -> Fraction:
    if el.star_center is None:
        return dim_of_mask(host, host.mask(el.vertices))
    return dimension(element_graph(host, el))


def element_contractible(host: Graph, el: Element, budget: int | None = None) -> TriState:
    if el.star_center is not None:
        # a star graph is a tree: removing leaves reaches the center
        return TriState(Verdict.YES, "star graph")
    return contractible_subgraph(host, el.vertices, budget)


@dataclass(frozen=True)
class Intersection:
    graph: Graph
    dim: Fraction
    contractible: Verdict

    @property
    def empty(self) -> bool:
        return self.graph.order == 0


def intersection(host: Graph, a: Element, b: Element, budget: int | None = None) -> Intersection:
    """Intersection of two elements as graphs.

    Two induced elements meet in the subgraph induced on their common
    vertices. If a star element is involved the intersection is the graph of
    common edges; when there are none it is the set of common vertices.
    """
    bud = default_budget() if budget is None else budget
    memo = _memo(host, "intersections")
    key = (a, b) if a.sort_key() <= b.sort_key() else (b, a)
    got = memo.get((key, bud))
    if got is not None:
        return got
    if a.star_center is None and b.star_center is None:
        mask = host.mask(a.vertices) & host.mask(b.vertices)
        res = Intersection(host.induced_by_mask(mask), dim_of_mask(host, mask), _mask_status(host, mask, bud)[0])
    else:
        common = element_edges(host, a) & element_edges(host, b)
        if common:
            verts = sorted({v for e in common for v in e})
            g = Graph(verts, common)
        else:
            g = Graph(sorted(set(a.vertices) & set(b.vertices)))
        d, c = _graph_facts(host, g, bud)
        res = Intersection(g, d, c)
    memo[(key, bud)] = res
    return res


def satisfies_dimension_assumption(host: Graph, a: Element, b: Element) -> bool:
    """Linked in the nerve: nonempty intersection with dim(A n B) >= min(dim A, dim B)."""
    inter = intersection(host, a, b)
    if inter.empty:
        return False
    return inter.dim >= min(element_dimension(host, a), element_dimension(host, b))


# -- nerve -------------------------------------------------------------------


@dataclass(frozen=True)
class WeightedNerve:
    """Nerve graph on nodes ``0..m-1`` (one per element) with element dimensions as weights."""

    graph: Graph
    weights: tuple[Fraction, ...]

    @property
    def labels(self) -> dict[int, Fraction]:
        return dict(enumerate(self.weights))

    def to_json(self) -> dict:
        return {
            "nodes": list(self.graph.vertices),
            "edges": [list(e) for e in self.graph.edges],
            "weights": [fmt_rational(w) for w in self.weights],
        }


def nerve(b: SubBasis) -> WeightedNerve:
    host = b.host
    els = b.elements
    memo = _memo(host, "nerves")
    if els in memo:
        return memo[els]
    edges = [
        (i, j)
        for i in range(len(els))
        for j in range(i + 1, len(els))
        if satisfies_dimension_assumption(host, els[i], els[j])
    ]
    weights = tuple(element_dimension(host, e) for e in els)
    # one shared object, so caches hung on the nerve graph survive repeated calls
    memo[els] = WeightedNerve(Graph(range(len(els)), edges), weights)
    return memo[els]


# -- validation ----------------------------------------------------------------


@dataclass(frozen=True)
class PairCheck:
    i: int
    j: int
    dim_i: Fraction
    dim_j: Fraction
    dim_intersection: Fraction
    linked: bool
    intersection_contractible: Verdict | None

    def to_json(self) -> dict:
        return {
            "pair": [self.i, self.j],
            "dims": [fmt_rational(self.dim_i), fmt_rational(self.dim_j)],
            "dim_intersection": fmt_rational(self.dim_intersection),
            "linked": self.linked,
            "intersection_contractible": None
            if self.intersection_contractible is None
            else self.intersection_contractible.value,
        }


@dataclass(frozen=True)
class ValidationReport:
    contractible_elements: tuple[TriState, ...]
    dimension_pairs: tuple[PairCheck, ...]
    missing_edges: tuple[tuple[int, int], ...]
    nerve_homotopic: TriState
    overall: Verdict
    reasons: tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return self.overall is Verdict.YES

    def to_json(self) -> dict:
        return {
            "overall": self.overall.value,
            "reasons": list(self.reasons),
            "contractible_elements": [t.verdict.value for t in self.contractible_elements],
            "dimension_pairs": [p.to_json() for p in self.dimension_pairs],
            "missing_edges": [list(e) for e in self.missing_edges],
            "nerve_homotopic": {"verdict": self.nerve_homotopic.verdict.value, "reason": self.nerve_homotopic.reason},
        }


def validate(b: SubBasis, budget: int | None = None) -> ValidationReport:
    bud = default_budget() if budget is None else budget
    memo = _memo(b.host, "validations")
    key = (b.elements, bud)
    if key not in memo:
        memo[key] = _validate(b, bud)
    return memo[key]


def _validate(b: SubBasis, bud: int) -> ValidationReport:
    host = b.host
    els = b.elements
    reasons = []
    elem = tuple(element_contractible(host, e, bud) for e in els)
    for i, t in enumerate(elem):
        if not t.is_yes:
            reasons.append(f"element {i} contractible: {t.verdict.value} ({t.reason})")
    pairs = []
    for i in range(len(els)):
        for j in range(i + 1, len(els)):
            inter = intersection(host, els[i], els[j], bud)
            if inter.empty:
                continue
            di, dj = element_dimension(host, els[i]), element_dimension(host, els[j])
            linked = inter.dim >= min(di, dj)
            c = inter.contractible if linked else None
            if linked and c is not Verdict.YES:
                reasons.append(f"linked pair ({i},{j}) has intersection contractible: {c.value}")
            pairs.append(PairCheck(i, j, di, dj, inter.dim, linked, c))
    covered = set()
    for e in els:
        covered |= element_edges(host, e)
    missing = tuple(e for e in host.edges if e not in covered)
    if missing:
        reasons.append(f"{len(missing)} edge(s) not covered")
    nv = nerve(b)
    nh = homotopy_equivalent(host, nv.graph, bud)
    if not nh.is_yes:
        reasons.append(f"nerve homotopic to host: {nh.verdict.value} ({nh.reason})")
    verdicts = [t.verdict for t in elem] + [p.intersection_contractible for p in pairs if p.linked] + [nh.verdict]
    if missing or Verdict.NO in verdicts:
        overall = Verdict.NO
    elif all(v is Verdict.YES for v in verdicts):
        overall = Verdict.YES
    else:
        overall = Verdict.UNKNOWN
    return ValidationReport(elem, tuple(pairs), missing, nh, overall, tuple(reasons))


# -- dimension summary -----------------------------------------------------------


def host_dimension_of(host: Graph, el: Element) -> Fraction:
    """Mean over the element's vertices of ``1 + dim(S(x))``, spheres taken in the host."""
    return sum((local_dimension(host, x) for x in el.vertices), Fraction(0)) / len(el.vertices)


def dimension_functional(b: SubBasis) -> Fraction:
    if not b.elements:
        return Fraction(0)
    total = sum((abs(host_dimension_of(b.host, e) - element_dimension(b.host, e)) for e in b.elements), Fraction(0))
    return total / len(b.elements)


@dataclass(frozen=True)
class DimensionSummary:
    spectrum: tuple[Fraction, ...]
    topological_dimension: Fraction
    functional: Fraction
    max_nerve_degree: int

    def to_json(self) -> dict:
        return {
            "spectrum": [fmt_rational(x) for x in self.spectrum],
            "topological_dimension": fmt_rational(self.topological_dimension),
            "functional": fmt_rational(self.functional),
            "max_nerve_degree": self.max_nerve_degree,
        }


def dimension_summary(b: SubBasis) -> DimensionSummary:
    spec = tuple(element_dimension(b.host, e) for e in b.elements)
    topo = sum(spec, Fraction(0)) / len(spec) if spec else Fraction(-1)
    nv = nerve(b).graph
    maxdeg = max((nv.degree(v) for v in nv.vertices), default=0)
    return DimensionSummary(spec, topo, dimension_functional(b), maxdeg)


# -- canonical topologies -----------------------------------------------------------


def star_topology(g: Graph) -> SubBasis:
    els = [star_element(g, x) if g.degree(x) else Element((x,)) for x in g.vertices]
    return SubBasis(g, els)


def unit_ball_topology(g: Graph) -> SubBasis:
    """Distinct unit balls as induced elements, in order of their centers."""
    return SubBasis(g, [induced((x, *g.neighbors(x))) for x in g.vertices], dedupe=True)


def indiscrete_topology(g: Graph) -> SubBasis:
    if g.order == 0:
        return SubBasis(g, [])
    return SubBasis(g, [induced(g.vertices)])


# -- connectedness and local predicates ----------------------------------------------


def is_connected_topological(b: SubBasis) -> bool:
    """False iff the elements split into two nonempty groups with no shared vertex."""
    n = len(b.elements)
    if n <= 1:
        return True
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if set(b.elements[i].vertices) & set(b.elements[j].vertices)
    ]
    return len(connected_components(Graph(range(n), edges))) == 1


@dataclass(frozen=True)
class DimensionPredicates:
    homogeneous: bool
    maximal: bool


def dimension_predicates(g: Graph, w: Iterable[int], star_center: int | None = None) -> DimensionPredicates:
    """Is ``1 + dim S_K(x)`` constant over K, and does it equal ``1 + dim S_G(x)`` everywhere?

    ``K`` is the subgraph induced on ``w``, or the star at ``star_center``.
    """
    ws = vertex_set(w)
    if not ws:
        raise InputError("dimension predicates need a nonempty vertex set")
    el = Element(ws, star_center)
    _check_element(g, el)
    k = element_graph(g, el)
    inner = [local_dimension(k, x) for x in ws]
    outer = [local_dimension(g, x) for x in ws]
    return DimensionPredicates(len(set(inner)) == 1, inner == outer)


def fmt_rational(x: Fraction | int) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
