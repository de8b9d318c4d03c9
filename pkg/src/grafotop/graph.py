"""Finite simple graphs, local substructures, cliques and isomorphism."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from grafotop import kernels
from grafotop.errors import InputError


class Graph:
    """Immutable finite simple graph on integer vertex labels.

    Vertices and edges iterate in ascending order. Internally each vertex
    also has a bit position (its rank among the labels) so that vertex
    subsets can be handled as int bitmasks; ``masks[i]`` is the
    neighbourhood of the ``i``-th vertex.
    """

    __slots__ = ("vertices", "edges", "pos", "masks", "_adj", "_hash", "_cache")

    def __init__(self, vertices: Iterable[int], edges: Iterable[tuple[int, int]] = ()):
        verts = []
        for v in vertices:
            if isinstance(v, bool) or not isinstance(v, int):
                raise InputError(f"vertex labels must be integers, got {v!r}")
            verts.append(v)
        vs = tuple(sorted(verts))
        if len(set(vs)) != len(vs):
            raise InputError("duplicate vertex label")
        pos = {v: i for i, v in enumerate(vs)}
        es = set()
        masks = [0] * len(vs)
        for e in edges:
            try:
                u, v = e
            except (TypeError, ValueError):
                raise InputError(f"malformed edge {e!r}") from None
            if u == v:
                raise InputError(f"self-loop at {u}")
            if u not in pos or v not in pos:
                raise InputError(f"edge {e!r} has an endpoint that is not a vertex")
            key = (u, v) if u < v else (v, u)
            if key in es:
                raise InputError(f"duplicate edge {key}")
            es.add(key)
            masks[pos[u]] |= 1 << pos[v]
            masks[pos[v]] |= 1 << pos[u]
        self.vertices = vs
        self.edges = tuple(sorted(es))
        self.pos = pos
        self.masks = masks
        self._adj = None
        self._hash = None
        self._cache = {}

    @classmethod
    def _from_masks(cls, labels: tuple[int, ...], masks: list[int]) -> Graph:
        # trusted constructor: labels ascending, masks symmetric and loop-free
        g = cls.__new__(cls)
        g.vertices = labels
        g.pos = {v: i for i, v in enumerate(labels)}
        g.masks = masks
        es = []
        for i, m in enumerate(masks):
            up = m >> (i + 1)
            j = i + 1
            while up:
                if up & 1:
                    es.append((labels[i], labels[j]))
                up >>= 1
                j += 1
        g.edges = tuple(es)
        g._adj = None
        g._hash = None
        g._cache = {}
        return g

    # -- basic queries -------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def adjacency(self) -> dict[int, frozenset[int]]:
        if self._adj is None:
            self._adj = {v: frozenset(self.members(self.masks[i])) for i, v in enumerate(self.vertices)}
        return self._adj

    def neighbors(self, x: int) -> frozenset[int]:
        self.check_vertex(x)
        return self.adjacency[x]

    def degree(self, x: int) -> int:
        return len(self.neighbors(x))

    def has_edge(self, u: int, v: int) -> bool:
        pu = self.pos.get(u)
        pv = self.pos.get(v)
        if pu is None or pv is None:
            return False
        return bool(self.masks[pu] >> pv & 1)

    def check_vertex(self, x: int) -> None:
        if x not in self.pos:
            raise InputError(f"unknown vertex {x!r}")

    def mask(self, vertices: Iterable[int]) -> int:
        m = 0
        pos = self.pos
        for v in vertices:
            p = pos.get(v)
            if p is None:
                raise InputError(f"unknown vertex {v!r}")
            m |= 1 << p
        return m

    def members(self, mask: int) -> tuple[int, ...]:
        out = []
        labels = self.vertices
        while mask:
            low = mask & -mask
            out.append(labels[low.bit_length() - 1])
            mask ^= low
        return tuple(out)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.vertices)) - 1

    def induced_by_mask(self, mask: int) -> Graph:
        idx = []
        m = mask
        while m:
            low = m & -m
            idx.append(low.bit_length() - 1)
            m ^= low
        labels = tuple(self.vertices[i] for i in idx)
        newpos = {i: k for k, i in enumerate(idx)}
        masks = []
        for i in idx:
            nm = 0
            nb = self.masks[i] & mask
            while nb:
                low = nb & -nb
                nm |= 1 << newpos[low.bit_length() - 1]
                nb ^= low
            masks.append(nm)
        return Graph._from_masks(labels, masks)

    def relabel(self, mapping: Mapping[int, int]) -> Graph:
        return Graph((mapping[v] for v in self.vertices), ((mapping[u], mapping[v]) for u, v in self.edges))

    def canonical(self) -> tuple[Graph, dict[int, int]]:
        """Relabel to ``0..n-1``; returns the graph and the map new -> original."""
        back = dict(enumerate(self.vertices))
        return Graph._from_masks(tuple(range(self.order)), list(self.masks)), back

    # -- value semantics -----------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vertices, self.edges))
        return self._hash

    def __repr__(self):
        return f"Graph(vertices={list(self.vertices)}, edges={[list(e) for e in self.edges]})"

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.edges]}


EMPTY = Graph(())


def _check_subset(g: Graph, w: Iterable[int]) -> int:
    return g.mask(w)


def vertex_set(w: Iterable[int]) -> tuple[int, ...]:
    """Canonical sorted, duplicate-free representation of a vertex set."""
    return tuple(sorted(set(w)))


def induced_subgraph(g: Graph, w: Iterable[int]) -> Graph:
    return g.induced_by_mask(_check_subset(g, w))


def unit_sphere(g: Graph, x: int) -> Graph:
    g.check_vertex(x)
    return g.induced_by_mask(g.masks[g.pos[x]])


def unit_ball(g: Graph, x: int) -> Graph:
    g.check_vertex(x)
    p = g.pos[x]
    return g.induced_by_mask(g.masks[p] | 1 << p)


def star_graph(g: Graph, x: int) -> Graph:
    """The edges at ``x`` and their endpoints; neighbour-neighbour edges are dropped."""
    nbrs = g.neighbors(x)
    return Graph((x, *nbrs), ((x, y) for y in nbrs))


def union_graph(a: Graph, b: Graph) -> Graph:
    vs = set(a.vertices) | set(b.vertices)
    es = set(a.edges) | set(b.edges)
    return Graph(vs, es)


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    seen = 0
    comps = []
    for i in range(g.order):
        if seen >> i & 1:
            continue
        comp = 1 << i
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= g.masks[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(g.members(comp))
    return comps


def mask_components(g: Graph, mask: int) -> list[int]:
    """Connected components of the subgraph induced on ``mask``, as bitmasks."""
    comps = []
    rest = mask
    while rest:
        low = rest & -rest
        comp = low
        frontier = low
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                nxt |= g.masks[b.bit_length() - 1]
                f ^= b
            frontier = nxt & mask & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def is_path_connected(g: Graph) -> bool:
    """True for the empty graph and for graphs with one component."""
    return len(connected_components(g)) <= 1


# -- cliques ---------------------------------------------------------------


@dataclass(frozen=True)
class CliqueSet:
    """Cliques graded by dimension: ``grades[k]`` lists the ``K_{k+1}`` subgraphs."""

    grades: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def counts(self) -> tuple[int, ...]:
        return tuple(len(gr) for gr in self.grades)

    def grade(self, k: int) -> tuple[tuple[int, ...], ...]:
        if 0 <= k < len(self.grades):
            return self.grades[k]
        return ()

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** k * n for k, n in enumerate(self.counts))


def _index_cliques(g: Graph) -> list[list[tuple[int, ...]]]:
    got = g._cache.get("cliques")
    if got is None:
        got = kernels.clique_grades(g.order, g.masks, -1)
        g._cache["cliques"] = got
    return got


def enumerate_cliques(g: Graph, k_max: int | None = None) -> CliqueSet:
    full = g._cache.get("clique_set")
    if full is None:
        labels = g.vertices
        grades = _index_cliques(g)
        full = CliqueSet(tuple(tuple(tuple(labels[i] for i in c) for c in gr) for gr in grades))
        g._cache["clique_set"] = full
    if k_max is None:
        return full
    return CliqueSet(full.grades[: k_max + 1])


def clique_counts(g: Graph) -> tuple[int, ...]:
    return tuple(len(gr) for gr in _index_cliques(g))


def mask_clique_counts(g: Graph, mask: int) -> list[int]:
    """Clique counts of the subgraph induced on ``mask`` without building it."""
    counts: list[int] = []
    masks = g.masks

    def extend(k, cand):
        while cand:
            low = cand & -cand
            cand ^= low
            if len(counts) <= k:
                counts.append(0)
            counts[k] += 1
            nxt = cand & masks[low.bit_length() - 1]
            if nxt:
                extend(k + 1, nxt)

    extend(0, mask)
    return counts


# -- isomorphism -----------------------------------------------------------


def _refine(graphs, init_colors):
    """Joint colour refinement; colours are comparable across the graphs."""
    colors = [list(c) for c in init_colors]
    n_classes = len({c for cs in colors for c in cs})
    while True:
        table: dict = {}
        new = []
        for g, cs in zip(graphs, colors):
            row = []
            for i in range(g.order):
                nb = g.masks[i]
                sig = []
                while nb:
                    low = nb & -nb
                    sig.append(cs[low.bit_length() - 1])
                    nb ^= low
                key = (cs[i], tuple(sorted(sig)))
                row.append(table.setdefault(key, len(table)))
            new.append(row)
        colors = new
        if len(table) == n_classes:
            return colors
        n_classes = len(table)


def iter_isomorphisms(
    a: Graph,
    b: Graph,
    labels_a: Mapping[int, object] | None = None,
    labels_b: Mapping[int, object] | None = None,
) -> Iterator[dict[int, int]]:
    """Yield every adjacency- and label-preserving bijection ``a -> b``."""
    if (labels_a is None) != (labels_b is None):
        raise InputError("labels must be given for both graphs or neither")
    if a.order != b.order or a.size != b.size:
        return
    n = a.order
    if n == 0:
        yield {}
        return
    if labels_a is not None:
        vals = sorted({repr(labels_a[v]) for v in a.vertices} | {repr(labels_b[v]) for v in b.vertices})
        code = {s: i for i, s in enumerate(vals)}
        ca = [(code[repr(labels_a[v])], bin(a.masks[i]).count("1")) for i, v in enumerate(a.vertices)]
        cb = [(code[repr(labels_b[v])], bin(b.masks[i]).count("1")) for i, v in enumerate(b.vertices)]
    else:
        ca = [bin(m).count("1") for m in a.masks]
        cb = [bin(m).count("1") for m in b.masks]
    col_a, col_b = _refine((a, b), (ca, cb))
    if sorted(col_a) != sorted(col_b):
        return
    class_size: dict[int, int] = {}
    for c in col_a:
        class_size[c] = class_size.get(c, 0) + 1
    by_color: dict[int, list[int]] = {}
    for j, c in enumerate(col_b):
        by_color.setdefault(c, []).append(j)

    # search order: grow from the rarest colour along edges
    order: list[int] = []
    placed = 0
    while len(order) < n:
        best = None
        best_key = None
        for i in range(n):
            if placed >> i & 1:
                continue
            links = bin(a.masks[i] & placed).count("1")
            key = (-links, class_size[col_a[i]], i)
            if best_key is None or key < best_key:
                best, best_key = i, key
        order.append(best)
        placed |= 1 << best
    earlier = []
    placed = 0
    for i in order:
        earlier.append(placed)
        placed |= 1 << i

    ma, mb = a.masks, b.masks
    image = [-1] * n
    used = [False] * n
    la, lb = a.vertices, b.vertices

    def rec(k):
        if k == n:
            yield {la[i]: lb[image[i]] for i in range(n)}
            return
        i = order[k]
        prev = earlier[k]
        adj_prev = ma[i] & prev
        for j in by_color[col_a[i]]:
            if used[j]:
                continue
            ok = True
            p = prev
            mj = mb[j]
            while p:
                low = p & -p
                u = low.bit_length() - 1
                p ^= low
                if bool(adj_prev & low) != bool(mj >> image[u] & 1):
                    ok = False
                    break
            if not ok:
                continue
            image[i] = j
            used[j] = True
            yield from rec(k + 1)
            used[j] = False
            image[i] = -1

    yield from rec(0)


def is_isomorphic(
    a: Graph,
    b: Graph,
    labels_a: Mapping[int, object] | None = None,
    labels_b: Mapping[int, object] | None = None,
) -> dict[int, int] | None:
    """A label-preserving isomorphism ``a -> b``, or ``None`` if there is none."""
    return next(iter_isomorphisms(a, b, labels_a, labels_b), None)


def automorphisms(g: Graph, labels: Mapping[int, object] | None = None) -> list[dict[int, int]]:
    return list(iter_isomorphisms(g, g, labels, labels))


def is_automorphism(g: Graph, f: Mapping[int, int]) -> bool:
    if set(f) != set(g.vertices) or sorted(f.values()) != list(g.vertices):
        return False
    return all(g.has_edge(f[u], f[v]) for u, v in g.edges)


# -- random graphs -----------------------------------------------------------


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph(range(n), edges)
