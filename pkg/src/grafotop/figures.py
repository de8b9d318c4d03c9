"""Graphs and sub-bases reconstructed from small worked examples.

The two necklace graphs were reconstructed by search so that the stated
invariants hold: host dimensions 131/60 and 15/7, six-element sub-bases with
nerve C_6 and element dimensions 1,2,1,2,1,3 read around the cycle.
"""

from __future__ import annotations

from grafotop.graph import Graph
from grafotop.library import c4_pyramid, cycle, sun
from grafotop.topology import SubBasis, induced


def necklace_small() -> Graph:
    """Ten vertices, dimension 131/60."""
    edges = [
        (1, 2), (1, 9), (1, 10), (2, 3), (2, 4), (2, 7), (2, 9), (2, 10),
        (3, 4), (4, 5), (4, 6), (5, 6), (5, 7), (6, 7), (7, 8), (9, 10),
    ]
    return Graph(range(1, 11), edges)


def necklace_large() -> Graph:
    """Fifteen vertices, dimension 15/7."""
    edges = [
        (1, 5), (2, 3), (2, 12), (2, 13), (2, 14), (2, 15), (3, 4), (3, 5), (3, 7),
        (3, 12), (3, 13), (3, 14), (4, 7), (5, 7), (5, 9), (6, 9), (8, 10), (8, 11),
        (8, 13), (9, 11), (9, 13), (10, 11), (11, 13), (12, 13), (12, 14), (12, 15),
        (13, 15),
    ]
    return Graph(range(1, 16), edges)


NECKLACE_SMALL_ELEMENTS = [(1, 2, 3), (2, 3, 4), (3, 4, 5), (4, 5, 6, 7), (2, 6, 7, 8, 9), (1, 2, 9, 10)]
NECKLACE_LARGE_ELEMENTS = [
    (1, 2, 3, 5), (3, 4, 5, 7), (5, 6, 7, 9, 11), (8, 9, 10, 11, 13), (2, 11, 13), (2, 3, 12, 13, 14, 15),
]


def _basis(g: Graph, els) -> SubBasis:
    return SubBasis(g, [induced(e) for e in els])


def necklace_small_topology() -> SubBasis:
    return _basis(necklace_small(), NECKLACE_SMALL_ELEMENTS)


def necklace_large_topology() -> SubBasis:
    return _basis(necklace_large(), NECKLACE_LARGE_ELEMENTS)


def c6_windows() -> SubBasis:
    """Six overlapping paths of three vertices on C_6."""
    return _basis(cycle(6), [(1, 2, 3), (2, 3, 4), (3, 4, 5), (4, 5, 6), (1, 5, 6), (1, 2, 6)])


def c6_thirds() -> SubBasis:
    """Three paths of four vertices on C_6; the nerve is a triangle."""
    return _basis(cycle(6), [(1, 2, 3, 4), (3, 4, 5, 6), (1, 2, 5, 6)])


def c6_edges() -> SubBasis:
    """The six edges of C_6 as elements; pairs meet in single points."""
    return _basis(cycle(6), [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6)])


def c4_windows() -> SubBasis:
    """Four paths of three vertices on C_4.

    Opposite windows meet in two non-adjacent vertices; that intersection has
    dimension 0 and so does not link them.
    """
    return _basis(cycle(4), [(1, 2, 3), (2, 3, 4), (1, 3, 4), (1, 2, 4)])


def c5_cover() -> SubBasis:
    return _basis(cycle(5), [(1, 2, 3, 4), (3, 4, 5), (1, 4, 5), (1, 2, 5)])


def pyramid_four() -> SubBasis:
    """C_4 with a cone over (1,2): triangle, two paths through 5 and a path 2-3-4.

    Not a valid topology: the nerve is a path while the host has a hole.
    """
    return _basis(c4_pyramid(), [(1, 2, 5), (2, 3, 5), (2, 3, 4), (1, 4, 5)])


def pyramid_cover() -> SubBasis:
    """A valid four-element topology on the same cone over C_4; nerve C_4."""
    return _basis(c4_pyramid(), [(1, 2, 3), (2, 3, 4), (1, 3, 4, 5), (1, 2, 5)])


def sun_triangle_cover() -> SubBasis:
    """Sun over a triangle with one ray per corner: the triangle plus triangle-with-ray sets."""
    return _basis(sun(1, 1, 1), [(1, 2, 3), (1, 2, 3, 4), (1, 2, 3, 5), (1, 2, 3, 6)])


def sun_arcs() -> SubBasis:
    """Sun over C_4 with rays of lengths 1,2,3,0.

    Element i is the arc of three cycle vertices centred at i together with
    the ray hanging at i. The nerve is C_4.
    """
    g = sun(1, 2, 3, 0)
    rays: dict[int, list[int]] = {i: [] for i in range(1, 5)}
    # walk outward from each cycle vertex along non-cycle vertices
    for i in range(1, 5):
        prev, cur = None, i
        while True:
            nxt = [y for y in g.neighbors(cur) if y > 4 and y != prev and y not in rays[i]]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            rays[i].append(cur)
    els = []
    for i in range(1, 5):
        arc = {(i - 2) % 4 + 1, i, i % 4 + 1}
        els.append(tuple(sorted(arc | set(rays[i]))))
    return _basis(g, els)


FIGURE_GRAPHS = {
    "necklace_small": necklace_small,
    "necklace_large": necklace_large,
}

FIGURE_SUBBASES = {
    "necklace_small": necklace_small_topology,
    "necklace_large": necklace_large_topology,
    "c6_windows": c6_windows,
    "c6_thirds": c6_thirds,
    "c6_edges": c6_edges,
    "c4_windows": c4_windows,
    "c5_cover": c5_cover,
    "pyramid_four": pyramid_four,
    "pyramid_cover": pyramid_cover,
    "sun_triangle_cover": sun_triangle_cover,
    "sun_arcs": sun_arcs,
}


def subbasis(name: str) -> SubBasis:
    from grafotop.errors import InputError

    if name not in FIGURE_SUBBASES:
        raise InputError(f"unknown builtin topology {name!r}; known: {', '.join(sorted(FIGURE_SUBBASES))}")
    return FIGURE_SUBBASES[name]()
