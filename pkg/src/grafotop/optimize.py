"""Deterministic first-improvement local search on the dimension functional."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterator

from grafotop.errors import InputError
from grafotop.graph import Graph, mask_components
from grafotop.homotopy import Verdict, default_budget, is_contractible
from grafotop.topology import (
    Element,
    SubBasis,
    dimension_functional,
    element_edges,
    induced,
    satisfies_dimension_assumption,
    validate,
)

SUBFAMILY_LIMIT = 12  # exhaustive subfamily checks up to this many elements


@dataclass
class OptimizeResult:
    subbasis: SubBasis
    trace: list = field(default_factory=list)
    evaluations: int = 0
    functional_before: Fraction = Fraction(0)
    functional_after: Fraction = Fraction(0)
    local_optimum: bool = False
    minimal: bool = False
    budget_exhausted: bool = False
    intersections_contractible: Verdict = Verdict.UNKNOWN

    def __iter__(self):
        # allows ``basis, trace = optimize(...)``
        return iter((self.subbasis, self.trace))

    @property
    def unchanged(self) -> bool:
        return not self.trace

    def to_json(self) -> dict:
        from grafotop.topology import fmt_rational

        return {
            "subbasis": self.subbasis.to_json(),
            "trace": self.trace,
            "evaluations": self.evaluations,
            "functional_before": fmt_rational(self.functional_before),
            "functional_after": fmt_rational(self.functional_after),
            "local_optimum": self.local_optimum,
            "minimal": self.minimal,
            "budget_exhausted": self.budget_exhausted,
            "intersections_contractible": self.intersections_contractible.value,
        }


def _with(els: tuple, i: int, new: list[Element]) -> list[Element] | None:
    """Replace element ``i`` by ``new``; None if that would duplicate an element."""
    rest = list(els[:i]) + list(els[i + 1:])
    out = list(els[:i]) + new + list(els[i + 1:])
    if len(set(out)) != len(out) or any(n in rest for n in new):
        return None
    return out


def candidate_moves(b: SubBasis) -> Iterator[tuple[str, list[Element]]]:
    """All single moves in a fixed order: delete, merge, convert, shrink, grow, split."""
    host = b.host
    els = b.elements
    n = len(els)
    for i in range(n):
        if n > 1:
            yield f"delete {els[i]}", list(els[:i] + els[i + 1:])
    for i, j in combinations(range(n), 2):
        if satisfies_dimension_assumption(host, els[i], els[j]):
            merged = induced(set(els[i].vertices) | set(els[j].vertices))
            rest = [e for k, e in enumerate(els) if k not in (i, j)]
            if merged not in rest:
                yield f"merge {els[i]} + {els[j]}", rest[:i] + [merged] + rest[i:]
    for i, e in enumerate(els):
        if e.is_star:
            out = _with(els, i, [induced(e.vertices)])
            if out is not None:
                yield f"induce {e}", out
    for i, e in enumerate(els):
        if e.is_star or len(e.vertices) < 2:
            continue
        for v in e.vertices:
            out = _with(els, i, [induced(x for x in e.vertices if x != v)])
            if out is not None:
                yield f"shrink {e} - {v}", out
    for i, e in enumerate(els):
        if e.is_star:
            continue
        ws = set(e.vertices)
        nbrs = sorted({y for x in e.vertices for y in host.neighbors(x)} - ws)
        for v in nbrs:
            out = _with(els, i, [induced(ws | {v})])
            if out is not None:
                yield f"grow {e} + {v}", out
    for i, e in enumerate(els):
        if e.is_star or len(e.vertices) < 3:
            continue
        for halves in _splits(host, e):
            out = _with(els, i, halves)
            if out is not None:
                yield f"split {e} -> {halves[0]} | {halves[1]}", out


def _splits(host: Graph, e: Element) -> Iterator[list[Element]]:
    """Cut the element at a cut vertex into two halves overlapping in an edge."""
    wmask = host.mask(e.vertices)
    for v in e.vertices:
        bit = 1 << host.pos[v]
        comps = mask_components(host, wmask & ~bit)
        if len(comps) < 2:
            continue
        first = comps[0]
        rest = wmask & ~bit & ~first
        vn = host.masks[host.pos[v]]
        a_link = vn & rest
        b_link = vn & first
        if not a_link or not b_link:
            continue
        a = first | bit | (a_link & -a_link)
        bm = rest | bit | (b_link & -b_link)
        yield [induced(host.members(a)), induced(host.members(bm))]


def _subfamily_intersection(host: Graph, fam: list[Element]) -> Graph:
    verts = set(fam[0].vertices)
    for e in fam[1:]:
        verts &= set(e.vertices)
    if all(not e.is_star for e in fam):
        return host.induced_by_mask(host.mask(verts))
    edges = element_edges(host, fam[0])
    for e in fam[1:]:
        edges &= element_edges(host, e)
    if edges:
        return Graph(sorted({v for ed in edges for v in ed}), edges)
    return Graph(sorted(verts))


def subfamily_intersections(b: SubBasis, budget: int | None = None) -> Verdict:
    """Are all nonempty intersections of two or more elements contractible?

    Empty intersections are exempt. Past ``SUBFAMILY_LIMIT`` elements only
    pairs and triples are checked and a full pass reports Unknown.
    """
    n = len(b.elements)
    top = n if n <= SUBFAMILY_LIMIT else 3
    seen: dict[Graph, Verdict] = {}
    result = Verdict.YES
    for size in range(2, top + 1):
        for fam in combinations(b.elements, size):
            g = _subfamily_intersection(b.host, list(fam))
            if g.order == 0:
                continue
            v = seen.get(g)
            if v is None:
                v = is_contractible(g, budget).verdict
                seen[g] = v
            if v is Verdict.NO:
                return Verdict.NO
            if v is Verdict.UNKNOWN:
                result = Verdict.UNKNOWN
    if top < n and result is Verdict.YES:
        return Verdict.UNKNOWN
    return result


def _valid(b: SubBasis, budget: int) -> bool:
    return validate(b, budget).overall is Verdict.YES


def optimize(b0: SubBasis, budget: int = 2000, search_budget: int | None = None) -> OptimizeResult:
    """Lower the dimension functional by single moves, keeping the topology valid.

    ``budget`` caps the number of candidate sub-bases examined. The first
    strictly improving valid move is taken each round. A final pass drops
    elements whose removal keeps the topology valid without raising the
    functional above its starting value.
    """
    sb = default_budget() if search_budget is None else search_budget
    rep = validate(b0, sb)
    if rep.overall is not Verdict.YES:
        raise InputError(f"optimize needs a valid sub-basis; validation says {rep.overall.value}: {list(rep.reasons)}")
    res = OptimizeResult(b0)
    start = dimension_functional(b0)
    res.functional_before = start
    cur = b0
    f_cur = start

    while True:
        improved = False
        for desc, els in candidate_moves(cur):
            if res.evaluations >= budget:
                res.budget_exhausted = True
                break
            res.evaluations += 1
            cand = SubBasis(cur.host, els)
            f = dimension_functional(cand)
            if f < f_cur and _valid(cand, sb):
                cur, f_cur = cand, f
                res.trace.append({"move": desc, "functional": str(f)})
                improved = True
                break
        if res.budget_exhausted:
            break
        if improved:
            continue
        # no improving move: prune redundant elements, then look again
        pruned = False
        for i in range(len(cur.elements)):
            if len(cur.elements) == 1:
                break
            cand = SubBasis(cur.host, cur.elements[:i] + cur.elements[i + 1:])
            f = dimension_functional(cand)
            if f <= start and _valid(cand, sb):
                res.trace.append({"move": f"drop redundant {cur.elements[i]}", "functional": str(f)})
                cur, f_cur = cand, f
                pruned = True
                break
        if not pruned:
            res.local_optimum = True
            break

    res.subbasis = cur
    res.functional_after = f_cur
    res.minimal = not any(
        _valid(SubBasis(cur.host, cur.elements[:i] + cur.elements[i + 1:]), sb)
        for i in range(len(cur.elements))
        if len(cur.elements) > 1
    )
    res.intersections_contractible = subfamily_intersections(cur, sb)
    return res


def is_locally_optimal(b: SubBasis, search_budget: int | None = None) -> bool:
    """No single move lowers the functional while keeping the topology valid."""
    sb = default_budget() if search_budget is None else search_budget
    f0 = dimension_functional(b)
    for _, els in candidate_moves(b):
        cand = SubBasis(b.host, els)
        if dimension_functional(cand) < f0 and _valid(cand, sb):
            return False
    return True

