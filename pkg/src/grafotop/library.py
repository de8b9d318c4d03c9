"""Named example graphs.

Labels start at 1 unless noted, so vertex sets written as
``(1,2,3)`` on ``C_6`` can be used directly. Every builtin is deterministic.
"""

from __future__ import annotations

import itertools
import math
from typing import Callable

from grafotop.errors import InputError
from grafotop.graph import Graph


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise InputError(msg)


def cycle(n: int) -> Graph:
    """C_n on 1..n with edges (i, i+1) and (n, 1)."""
    _need(n >= 3, "cycle needs n >= 3")
    return Graph(range(1, n + 1), [(i, i % n + 1) for i in range(1, n + 1)])


def path(n: int) -> Graph:
    """Path with n vertices 1..n."""
    _need(n >= 1, "path needs n >= 1")
    return Graph(range(1, n + 1), [(i, i + 1) for i in range(1, n)])


def complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    return Graph(range(1, n + 1), itertools.combinations(range(1, n + 1), 2))


def wheel(n: int) -> Graph:
    """W_n: hub 0 joined to the rim cycle 1..n."""
    c = cycle(n)
    return Graph((0, *c.vertices), (*c.edges, *((0, i) for i in c.vertices)))


def star(n: int) -> Graph:
    """K_{1,n}: center 0, leaves 1..n."""
    _need(n >= 0, "star needs n >= 0")
    return Graph(range(n + 1), [(0, i) for i in range(1, n + 1)])


def sun(*rays: int) -> Graph:
    """Cycle 1..k (k = number of rays) with a path of ``rays[i]`` new vertices hanging at cycle vertex i+1.

    Ray vertices are numbered consecutively from k+1 outward, ray by ray.
    """
    _need(len(rays) >= 3, "sun needs at least 3 ray lengths")
    _need(all(a >= 0 for a in rays), "ray lengths must be >= 0")
    k = len(rays)
    c = cycle(k)
    verts = list(c.vertices)
    edges = list(c.edges)
    nxt = k + 1
    for i, a in enumerate(rays, start=1):
        prev = i
        for _ in range(a):
            verts.append(nxt)
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(verts, edges)


def dumbbell(a: int, b: int, n: int) -> Graph:
    """An a-simplex and a b-simplex joined by a path with n vertices; a+b+n vertices in all.

    The path's end vertices belong to the simplices: K_{a+1} is 1..a+1,
    the path is a+1, a+2, ..., a+n and K_{b+1} is a+n..a+n+b.
    """
    _need(a >= 0 and b >= 0 and n >= 2, "dumbbell needs a, b >= 0 and n >= 2")
    ka = list(range(1, a + 2))
    chain = list(range(a + 1, a + n + 1))
    kb = list(range(a + n, a + n + b + 1))
    edges = set(itertools.combinations(ka, 2)) | set(itertools.combinations(kb, 2))
    edges |= set(zip(chain, chain[1:]))
    return Graph(range(1, a + b + n + 1), edges)


def octahedron() -> Graph:
    """K_{2,2,2}; antipodal (non-adjacent) pairs are {1,6}, {2,5}, {3,4}."""
    return Graph(range(1, 7), [(i, j) for i, j in itertools.combinations(range(1, 7), 2) if i + j != 7])


def octahedron_chord() -> Graph:
    """Octahedron plus the antipodal edge (1, 6)."""
    o = octahedron()
    return Graph(o.vertices, (*o.edges, (1, 6)))


def _distance_graph(points: list[tuple[float, ...]]) -> Graph:
    """Vertices 1..n; edges join points at the minimal pairwise distance."""
    n = len(points)
    dists = {(i, j): math.dist(points[i], points[j]) for i, j in itertools.combinations(range(n), 2)}
    dmin = min(dists.values())
    return Graph(range(1, n + 1), [(i + 1, j + 1) for (i, j), d in dists.items() if d < dmin * 1.0001])


def _cyclic(p):
    return [p, (p[2], p[0], p[1]), (p[1], p[2], p[0])]


def icosahedron() -> Graph:
    """Vertices from the cyclic permutations of (0, +-1, +-phi) in lexicographic sign order."""
    phi = (1 + math.sqrt(5)) / 2
    pts = []
    for s1, s2 in itertools.product((-1, 1), repeat=2):
        pts.extend(_cyclic((0.0, s1 * 1.0, s2 * phi)))
    return _distance_graph(pts)


def snub_cube() -> Graph:
    """Even permutations of (+-1, +-1/t, +-t) with an even number of plus signs, odd ones with an odd number.

    t is the tribonacci constant. 24 vertices, 60 edges, 32 triangles.
    """
    t = 1.839286755214161
    base = (1.0, 1 / t, t)
    pts = []
    for perm in itertools.permutations(range(3)):
        inversions = sum(1 for i, j in itertools.combinations(range(3), 2) if perm[i] > perm[j])
        for signs in itertools.product((1, -1), repeat=3):
            plus = sum(1 for s in signs if s > 0)
            if plus % 2 == inversions % 2:
                pts.append(tuple(signs[k] * base[perm[k]] for k in range(3)))
    return _distance_graph(sorted(pts))


def cube() -> Graph:
    """Q_3 on 1..8; i and j adjacent when the bit patterns of i-1 and j-1 differ in one bit."""
    return Graph(range(1, 9), [(i + 1, j + 1) for i, j in itertools.combinations(range(8), 2) if bin(i ^ j).count("1") == 1])


def petersen() -> Graph:
    """Outer 5-cycle 1..5, spokes i -- i+5, inner pentagram on 6..10."""
    outer = [(i, i % 5 + 1) for i in range(1, 6)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    inner = [(i + 5, (i + 1) % 5 + 6) for i in range(1, 6)]
    return Graph(range(1, 11), outer + spokes + inner)


def utility() -> Graph:
    """K_{3,3} with parts {1,2,3} and {4,5,6}."""
    return Graph(range(1, 7), [(i, j) for i in (1, 2, 3) for j in (4, 5, 6)])


def prism() -> Graph:
    """Triangular prism 1,2,3 / 4,5,6 with each square side split by a diagonal.

    The diagonals (1,5), (2,6), (3,4) make the clique complex a 2-sphere.
    """
    edges = [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (1, 4), (2, 5), (3, 6), (1, 5), (2, 6), (3, 4)]
    return Graph(range(1, 7), edges)


def bull() -> Graph:
    """Triangle 1,2,3 with pendant 4 at 1 and pendant 5 at 2."""
    return Graph(range(1, 6), [(1, 2), (2, 3), (1, 3), (1, 4), (2, 5)])


def house() -> Graph:
    """Square 1-2-3-4 with roof vertex 5 over the edge (1, 2)."""
    return Graph(range(1, 6), [(1, 2), (2, 3), (3, 4), (4, 1), (1, 5), (2, 5)])


def kite() -> Graph:
    """K_4 minus the edge (3, 4)."""
    return Graph(range(1, 5), [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)])


def gem() -> Graph:
    """Path 1-2-3-4 plus apex 5 joined to all of it."""
    return Graph(range(1, 6), [(1, 2), (2, 3), (3, 4)] + [(i, 5) for i in range(1, 5)])


def gate() -> Graph:
    """Strip of three triangles: square of the path 1..5."""
    return Graph(range(1, 6), [(i, i + 1) for i in range(1, 5)] + [(i, i + 2) for i in range(1, 4)])


def fly() -> Graph:
    """Two triangles sharing vertex 1 (butterfly)."""
    return Graph(range(1, 6), [(1, 2), (1, 3), (2, 3), (1, 4), (1, 5), (4, 5)])


def fork() -> Graph:
    """Path 1-2-3-4 with an extra leaf 5 at vertex 2 (chair)."""
    return Graph(range(1, 6), [(1, 2), (2, 3), (3, 4), (2, 5)])


def cricket() -> Graph:
    """Triangle 1,2,3 with two pendants 4, 5 at vertex 1."""
    return Graph(range(1, 6), [(1, 2), (2, 3), (1, 3), (1, 4), (1, 5)])


def dart() -> Graph:
    """Kite on 1..4 with pendant 5 at the degree-3 vertex 1."""
    k = kite()
    return Graph(range(1, 6), (*k.edges, (1, 5)))


def lollipop(n: int = 2) -> Graph:
    """K_4 on 1..4 with a path of n further vertices hanging at 4."""
    _need(n >= 1, "lollipop tail must be >= 1")
    return dumbbell(3, 0, n + 1)


def hex_region() -> Graph:
    """Hexagonal disc: W_6."""
    return wheel(6)


def hole() -> Graph:
    """Annulus: outer square 1..4, inner square 5..8, quads split by diagonals.

    Outer i is joined to inner i+4 and to inner (i mod 4)+5.
    """
    edges = [(i, i % 4 + 1) for i in range(1, 5)]
    edges += [(i + 4, i % 4 + 5) for i in range(1, 5)]
    edges += [(i, i + 4) for i in range(1, 5)]
    edges += [(i, i % 4 + 5) for i in range(1, 5)]
    return Graph(range(1, 9), edges)


def dihedral() -> Graph:
    """Hexagonal prism C_6 x K_2: cycles 1..6 and 7..12 with rungs i -- i+6."""
    edges = [(i, i % 6 + 1) for i in range(1, 7)]
    edges += [(i + 6, i % 6 + 7) for i in range(1, 7)]
    edges += [(i, i + 6) for i in range(1, 7)]
    return Graph(range(1, 13), edges)


def pants() -> Graph:
    """Disc with two holes: triangulated 7x5 grid without the interior points (2,2) and (4,2).

    Grid point (i, j) has label 5*i + j + 1; squares are split along the
    (i,j)-(i+1,j+1) diagonal.
    """
    def lab(i, j):
        return 5 * i + j + 1

    drop = {lab(2, 2), lab(4, 2)}
    edges = []
    for i in range(7):
        for j in range(5):
            for di, dj in ((1, 0), (0, 1), (1, 1)):
                a, b = (i, j), (i + di, j + dj)
                if b[0] < 7 and b[1] < 5:
                    edges.append((lab(*a), lab(*b)))
    verts = [v for v in range(1, 36) if v not in drop]
    return Graph(verts, [e for e in edges if e[0] not in drop and e[1] not in drop])


def c4_pyramid() -> Graph:
    """C_4 on 1..4 with a cone vertex 5 over the edge (1, 2)."""
    return Graph(range(1, 6), [(1, 2), (2, 3), (3, 4), (4, 1), (1, 5), (2, 5)])


def two_triangles() -> Graph:
    """Same graph as ``fly``."""
    return fly()


def cartesian_product(a: Graph, b: Graph) -> tuple[Graph, dict[int, tuple[int, int]]]:
    """Product graph on pairs, numbered 1.. in lexicographic pair order; returns the pair map too."""
    pairs = [(u, v) for u in a.vertices for v in b.vertices]
    label = {p: i for i, p in enumerate(pairs, start=1)}
    edges = []
    for (u1, v1), (u2, v2) in itertools.combinations(pairs, 2):
        if (u1 == u2 and b.has_edge(v1, v2)) or (v1 == v2 and a.has_edge(u1, u2)):
            edges.append((label[(u1, v1)], label[(u2, v2)]))
    return Graph(label.values(), edges), {i: p for p, i in label.items()}


# name -> (constructor, parameter help)
BUILTINS: dict[str, tuple[Callable[..., Graph], str]] = {
    "cycle": (cycle, "n >= 3"),
    "path": (path, "n >= 1"),
    "complete": (complete, "n >= 1"),
    "wheel": (wheel, "n >= 3"),
    "star": (star, "n >= 0"),
    "sun": (sun, "a1 ... ak, k >= 3"),
    "dumbbell": (dumbbell, "a b n"),
    "octahedron": (octahedron, ""),
    "octahedron_chord": (octahedron_chord, ""),
    "icosahedron": (icosahedron, ""),
    "cube": (cube, ""),
    "petersen": (petersen, ""),
    "utility": (utility, ""),
    "prism": (prism, ""),
    "bull": (bull, ""),
    "house": (house, ""),
    "kite": (kite, ""),
    "gem": (gem, ""),
    "gate": (gate, ""),
    "fly": (fly, ""),
    "fork": (fork, ""),
    "cricket": (cricket, ""),
    "dart": (dart, ""),
    "lollipop": (lollipop, "[tail length, default 2]"),
    "hex": (hex_region, ""),
    "hole": (hole, ""),
    "dihedral": (dihedral, ""),
    "snub_cube": (snub_cube, ""),
    "snub_octahedron": (icosahedron, "(same graph as icosahedron)"),
    "tetrahedron": (lambda: complete(4), ""),
    "hypertetrahedron": (lambda: complete(5), ""),
    "pants": (pants, ""),
    "c4_pyramid": (c4_pyramid, ""),
}


def builtin(name: str, *params: int) -> Graph:
    entry = BUILTINS.get(name)
    if entry is None:
        from grafotop import figures

        if name in figures.FIGURE_GRAPHS:
            return figures.FIGURE_GRAPHS[name]()
        raise InputError(f"unknown builtin graph {name!r}")
    fn, _ = entry
    try:
        return fn(*params)
    except TypeError:
        raise InputError(f"bad parameters for {name}: {list(params)} (expected {entry[1] or 'none'})") from None


def builtin_names() -> list[str]:
    from grafotop import figures

    return sorted(BUILTINS) + sorted(figures.FIGURE_GRAPHS)


# parameter choices used when the whole library is exercised
CORPUS_PARAMS: dict[str, tuple[int, ...]] = {
    "cycle": (6,),
    "path": (5,),
    "complete": (5,),
    "wheel": (5,),
    "star": (4,),
    "sun": (1, 1, 1, 1),
    "dumbbell": (3, 4, 3),
}


def corpus() -> dict[str, Graph]:
    """Every builtin with representative parameters."""
    out = {}
    for name in builtin_names():
        out[name] = builtin(name, *CORPUS_PARAMS.get(name, ()))
    return out
