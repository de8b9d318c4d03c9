"""Homotopy moves on graphs: cone extensions and removals of vertices with contractible spheres.

Contractibility can only be semi-decided by searching for reductions, so
answers are three-valued. ``Yes`` always comes with a replayable move trace
ending in ``K_1``; ``No`` always names a homotopy invariant that differs from
the point's.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

from grafotop.cohomology import betti_vector
from grafotop.errors import InputError, InvariantViolation
from grafotop.graph import Graph, is_isomorphic, mask_clique_counts, mask_components
from grafotop.invariants import euler_characteristic


def default_budget() -> int:
    env = os.environ.get("GRAFOTOP_BUDGET")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise InputError(f"GRAFOTOP_BUDGET must be an integer, got {env!r}") from None
    return 10_000


class Verdict(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Extend:
    base: tuple[int, ...]
    new_vertex: int

    def to_json(self):
        return {"move": "extend", "base": list(self.base), "new_vertex": self.new_vertex}


@dataclass(frozen=True)
class Reduce:
    vertex: int

    def to_json(self):
        return {"move": "reduce", "vertex": self.vertex}


@dataclass(frozen=True)
class MoveTrace:
    start: Graph
    moves: tuple = ()

    def replay(self, verify: bool = True) -> Graph:
        """Apply the moves in order; with ``verify`` every move is re-checked."""
        g = self.start
        for mv in self.moves:
            if isinstance(mv, Extend):
                g = pyramid_extend(g, mv.base, mv.new_vertex) if verify else _extend(g, mv.base, mv.new_vertex)
            elif isinstance(mv, Reduce):
                if verify and not is_vertex_removable(g, mv.vertex):
                    raise InvariantViolation(f"trace removes {mv.vertex} whose sphere is not contractible")
                g = _remove(g, mv.vertex)
            else:
                raise InputError(f"unknown move {mv!r}")
        return g

    def to_json(self):
        return [m.to_json() for m in self.moves]


@dataclass(frozen=True)
class TriState:
    verdict: Verdict
    reason: str
    trace: MoveTrace | None = None
    details: dict = field(default_factory=dict, compare=False)

    @property
    def is_yes(self) -> bool:
        return self.verdict is Verdict.YES

    @property
    def is_no(self) -> bool:
        return self.verdict is Verdict.NO

    def to_json(self) -> dict:
        out = {"verdict": self.verdict.value, "reason": self.reason}
        if self.trace is not None:
            out["trace"] = self.trace.to_json()
        if self.details:
            out["details"] = self.details
        return out


# -- graph surgery -----------------------------------------------------------


def _extend(g: Graph, base: Iterable[int], new: int) -> Graph:
    base = tuple(base)
    return Graph((*g.vertices, new), (*g.edges, *((new, b) for b in base)))


def _remove(g: Graph, z: int) -> Graph:
    g.check_vertex(z)
    return g.induced_by_mask(g.full_mask & ~(1 << g.pos[z]))


def _fresh_label(g: Graph) -> int:
    return g.vertices[-1] + 1 if g.vertices else 0


# -- contractibility on induced subgraphs of a host ------------------------------


def _popcount(m: int) -> int:
    return bin(m).count("1")


def _bits(m: int):
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def _removable_in(g: Graph, x: int, cur: int, budget: int) -> bool:
    return _mask_status(g, g.masks[x] & cur, budget)[0] is Verdict.YES


def _greedy_collapse(g: Graph, mask: int, budget: int) -> tuple[int, list[int]]:
    """Remove the lowest removable vertex until none is left (or one vertex remains)."""
    cur = mask
    order = []
    while _popcount(cur) > 1:
        for x in _bits(cur):
            if _removable_in(g, x, cur, budget):
                cur ^= 1 << x
                order.append(x)
                break
        else:
            break
    return cur, order


def _backtrack(g: Graph, mask: int, budget: int) -> list[int] | None:
    dead: set[int] = set()
    nodes = 0
    path: list[int] = []

    def rec(cur):
        nonlocal nodes
        if _popcount(cur) == 1:
            return True
        if cur in dead:
            return False
        nodes += 1
        if nodes > budget:
            raise _BudgetExhausted
        for x in _bits(cur):
            if _removable_in(g, x, cur, budget):
                path.append(x)
                if rec(cur ^ (1 << x)):
                    return True
                path.pop()
        dead.add(cur)
        return False

    try:
        return path if rec(mask) else None
    except _BudgetExhausted:
        return None


class _BudgetExhausted(Exception):
    pass


def _mask_status(g: Graph, mask: int, budget: int):
    """(verdict, reason, removal order) for the subgraph induced on ``mask``."""
    cache = g._cache.setdefault("contractible", {})
    got = cache.get(mask)
    if got is not None and (got[0] is not Verdict.UNKNOWN or got[3] >= budget):
        return got[:3]
    res = _mask_status_uncached(g, mask, budget)
    cache[mask] = (*res, budget)
    return res


def _mask_status_uncached(g: Graph, mask: int, budget: int):
    n = _popcount(mask)
    if n == 0:
        return Verdict.NO, "empty graph: chi = 0", None
    if n == 1:
        return Verdict.YES, "single vertex", []
    for a in _bits(mask):
        if g.masks[a] & mask == mask ^ (1 << a):
            return Verdict.YES, "cone over a dominating vertex", [x for x in _bits(mask) if x != a]
    counts = mask_clique_counts(g, mask)
    chi = sum((-1) ** k * c for k, c in enumerate(counts))
    if chi != 1:
        return Verdict.NO, f"chi = {chi}", None
    if len(mask_components(g, mask)) > 1:
        return Verdict.NO, "disconnected: b0 > 1", None
    core, order = _greedy_collapse(g, mask, budget)
    if _popcount(core) == 1:
        return Verdict.YES, "greedy collapse", order
    b = betti_vector(g.induced_by_mask(core))
    if b != (1,):
        return Verdict.NO, f"betti vector {list(b)}", None
    path = _backtrack(g, mask, budget)
    if path is not None:
        return Verdict.YES, "collapse found by backtracking", path
    return Verdict.UNKNOWN, "no collapse found within budget; invariants agree with a point", None


# -- public operations -------------------------------------------------------


def is_vertex_removable(g: Graph, z: int, budget: int | None = None) -> bool:
    g.check_vertex(z)
    b = default_budget() if budget is None else budget
    return _mask_status(g, g.masks[g.pos[z]], b)[0] is Verdict.YES


def contractible_subgraph(g: Graph, w: Iterable[int], budget: int | None = None) -> TriState:
    """Contractibility of the subgraph of ``g`` induced on ``w``, reusing ``g``'s cache."""
    b = default_budget() if budget is None else budget
    mask = g.mask(w)
    verdict, reason, order = _mask_status(g, mask, b)
    trace = None
    if verdict is Verdict.YES:
        trace = MoveTrace(g.induced_by_mask(mask), tuple(Reduce(g.vertices[i]) for i in order))
    return TriState(verdict, reason, trace)


def is_contractible(g: Graph, budget: int | None = None) -> TriState:
    b = default_budget() if budget is None else budget
    res = contractible_subgraph(g, g.vertices, b)
    if res.verdict is not Verdict.UNKNOWN:
        return res
    core, trace = homotopy_core(g, b)
    if core.order == 1:
        return TriState(Verdict.YES, "reduced to a point with edge contractions", trace)
    return res


def pyramid_extend(g: Graph, base: Iterable[int], new_vertex: int | None = None) -> Graph:
    """Add a vertex joined to exactly ``base``, which must be verifiably contractible."""
    base = tuple(sorted(set(base)))
    new = _fresh_label(g) if new_vertex is None else new_vertex
    if new in g.pos:
        raise InputError(f"vertex {new} already exists")
    status = contractible_subgraph(g, base)
    if not status.is_yes:
        raise InputError(f"base is not verifiably contractible ({status.verdict.value}: {status.reason})")
    h = _extend(g, base, new)
    if euler_characteristic(h) != euler_characteristic(g):
        raise InvariantViolation("cone extension changed the Euler characteristic")
    return h


def remove_vertex(g: Graph, z: int) -> Graph:
    """Homotopy reduction: drop ``z``, whose unit sphere must be contractible."""
    if not is_vertex_removable(g, z):
        raise InputError(f"vertex {z} does not have a contractible unit sphere")
    return _remove(g, z)


def collapse(g: Graph, budget: int | None = None) -> tuple[Graph, MoveTrace]:
    """Reduce ``g`` until no vertex is removable.

    Lowest-label greedy removal first; if that gets stuck, a bounded
    backtracking search for a full collapse to a point is tried.
    """
    b = default_budget() if budget is None else budget
    full = g.full_mask
    verdict, _, order = _mask_status(g, full, b)
    if verdict is Verdict.YES:
        removed = 0
        for i in order:
            removed |= 1 << i
        return g.induced_by_mask(full & ~removed), MoveTrace(g, tuple(Reduce(g.vertices[i]) for i in order))
    core, order = _greedy_collapse(g, full, b)
    return g.induced_by_mask(core), MoveTrace(g, tuple(Reduce(g.vertices[i]) for i in order))


def _contract_edge(g: Graph, x: int, y: int, budget: int):
    """Merge the ends of edge ``xy`` if that is a composition of homotopy moves.

    Moves: cone a new vertex over ``B(x) u B(y)``, then remove ``x`` and ``y``
    (their spheres become cones over the new vertex).
    """
    px, py = g.pos[x], g.pos[y]
    base = g.masks[px] | g.masks[py] | (1 << px) | (1 << py)
    if _mask_status(g, base, budget)[0] is not Verdict.YES:
        return None
    m = _fresh_label(g)
    base_labels = g.members(base)
    keep = [v for v in g.vertices if v != x and v != y]
    edges = [e for e in g.edges if x not in e and y not in e]
    edges += [(v, m) for v in base_labels if v != x and v != y]
    moves = (Extend(base_labels, m), Reduce(x), Reduce(y))
    return Graph((*keep, m), edges), moves


def homotopy_core(g: Graph, budget: int | None = None) -> tuple[Graph, MoveTrace]:
    """A small graph homotopic to ``g``: alternate collapsing and edge contractions."""
    b = default_budget() if budget is None else budget
    cur = g
    moves: list = []
    while True:
        cur, tr = collapse(cur, b)
        moves.extend(tr.moves)
        if cur.order <= 1:
            break
        for x, y in cur.edges:
            step = _contract_edge(cur, x, y, b)
            if step is not None:
                cur = step[0]
                moves.extend(step[1])
                break
        else:
            break
    return cur, MoveTrace(g, tuple(moves))


def _invariants(g: Graph):
    return euler_characteristic(g), betti_vector(g)


def homotopy_equivalent(a: Graph, b: Graph, budget: int | None = None) -> TriState:
    bud = default_budget() if budget is None else budget
    chi_a, betti_a = _invariants(a)
    chi_b, betti_b = _invariants(b)
    if chi_a != chi_b:
        return TriState(Verdict.NO, f"chi differs: {chi_a} vs {chi_b}", details={"chi": [chi_a, chi_b]})
    if betti_a != betti_b:
        return TriState(
            Verdict.NO,
            f"betti vectors differ: {list(betti_a)} vs {list(betti_b)}",
            details={"betti": [list(betti_a), list(betti_b)]},
        )
    iso = is_isomorphic(a, b)
    if iso is not None:
        return TriState(Verdict.YES, "isomorphic", details={"isomorphism": _iso_json(iso)})
    ca = is_contractible(a, bud)
    cb = is_contractible(b, bud)
    if ca.is_yes and cb.is_yes:
        return TriState(
            Verdict.YES,
            "both contractible",
            details={"trace_a": ca.trace.to_json(), "trace_b": cb.trace.to_json()},
        )
    if ca.is_no != cb.is_no:
        # one side contractible and the other provably not
        return TriState(Verdict.NO, "exactly one side is contractible")
    core_a, tr_a = homotopy_core(a, bud)
    core_b, tr_b = homotopy_core(b, bud)
    iso = is_isomorphic(core_a, core_b)
    if iso is not None:
        return TriState(
            Verdict.YES,
            "reduced forms are isomorphic",
            details={
                "trace_a": tr_a.to_json(),
                "trace_b": tr_b.to_json(),
                "core_a": core_a.to_json(),
                "core_b": core_b.to_json(),
                "isomorphism": _iso_json(iso),
            },
        )
    return TriState(
        Verdict.UNKNOWN,
        "invariants agree but no common reduced form was found",
        details={"chi": chi_a, "betti": list(betti_a), "core_orders": [core_a.order, core_b.order]},
    )


def _iso_json(iso: dict) -> list:
    return [[k, v] for k, v in sorted(iso.items())]
