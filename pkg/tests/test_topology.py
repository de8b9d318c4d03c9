import random
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from conftest import to_nx
from grafotop.errors import InputError
from grafotop.figures import FIGURE_SUBBASES, subbasis
from grafotop.graph import Graph, is_isomorphic, random_graph
from grafotop.homotopy import Verdict
from grafotop.library import (
    builtin,
    corpus,
    cycle,
    dumbbell,
    fly,
    icosahedron,
    octahedron,
    two_triangles,
    wheel,
)
from grafotop.topology import (
    Element,
    SubBasis,
    dimension_functional,
    dimension_predicates,
    dimension_summary,
    element_dimension,
    indiscrete_topology,
    induced,
    intersection,
    is_connected_topological,
    nerve,
    star_topology,
    unit_ball_topology,
    validate,
)

# (overall verdict, dimension spectrum, nerve edge count) per builtin topology
FIGURES = {
    "necklace_small": ("yes", "1 2 1 2 1 3", 6),
    "necklace_large": ("yes", "1 2 1 2 1 3", 6),
    "c6_windows": ("yes", "1 1 1 1 1 1", 6),
    "c6_thirds": ("no", "1 1 1", 3),
    "c6_edges": ("no", "1 1 1 1 1 1", 0),
    "c4_windows": ("yes", "1 1 1 1", 4),
    "c5_cover": ("yes", "1 1 1 1", 4),
    "pyramid_four": ("no", "2 1 1 1", 3),
    "pyramid_cover": ("yes", "1 1 1 2", 4),
    "sun_triangle_cover": ("yes", "2 5/3 5/3 5/3", 6),
    "sun_arcs": ("yes", "1 1 1 1", 4),
}


@pytest.mark.parametrize("name", sorted(FIGURES))
def test_builtin_topologies(name):
    verdict, spec, n_edges = FIGURES[name]
    b = subbasis(name)
    assert validate(b).overall.value == verdict
    assert dimension_summary(b).spectrum == tuple(Fraction(x) for x in spec.split())
    assert nerve(b).graph.size == n_edges


def test_figure_table_is_complete():
    assert set(FIGURES) == set(FIGURE_SUBBASES)
    with pytest.raises(InputError):
        subbasis("nope")


def test_necklace_summaries():
    for name in ("necklace_small", "necklace_large"):
        s = dimension_summary(subbasis(name))
        assert s.topological_dimension == Fraction(10, 6)
        assert is_isomorphic(nerve(subbasis(name)).graph, cycle(6)) is not None


def test_invalid_reasons():
    rep = validate(subbasis("c6_thirds"))
    assert any("nerve" in r for r in rep.reasons)
    rep = validate(subbasis("c6_edges"))
    assert rep.nerve_homotopic.is_no
    assert not any(p.linked for p in rep.dimension_pairs)


def test_missing_edge_reported():
    g = cycle(5)
    b = SubBasis(g, [induced([1, 2, 3]), induced([3, 4, 5])])
    rep = validate(b)
    assert rep.missing_edges == ((1, 5),)
    assert rep.overall is Verdict.NO


@pytest.mark.parametrize("name", sorted(corpus()))
def test_star_topology_on_corpus(name):
    g = corpus()[name]
    b = star_topology(g)
    assert validate(b).ok
    assert is_isomorphic(nerve(b).graph, g) is not None


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 9), st.sampled_from([0.3, 0.5, 0.7]))
def test_star_topology_random(seed, n, p):
    g = random_graph(n, p, random.Random(seed))
    b = star_topology(g)
    assert validate(b).ok
    assert is_isomorphic(nerve(b).graph, g) is not None


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 10), st.sampled_from([0.2, 0.3, 0.5]))
def test_connectedness_matches_paths(seed, n, p):
    g = random_graph(n, p, random.Random(seed))
    assert is_connected_topological(star_topology(g)) == nx.is_connected(to_nx(g))


def test_icosahedron_unit_balls():
    b = unit_ball_topology(icosahedron())
    assert len(b) == 12
    assert validate(b).ok
    # every unit ball is a wheel of dimension 2
    assert set(dimension_summary(b).spectrum) == {Fraction(2)}


def test_unit_balls_fly_and_dumbbells():
    assert validate(unit_ball_topology(fly())).ok
    assert validate(unit_ball_topology(two_triangles())).ok
    assert validate(unit_ball_topology(dumbbell(2, 2, 2))).overall is Verdict.NO


def test_indiscrete():
    g = wheel(5)
    b = indiscrete_topology(g)
    assert len(b) == 1 and validate(b).ok
    assert dimension_functional(b) == 0
    assert len(indiscrete_topology(Graph([]))) == 0


def test_star_intersections():
    g = octahedron()
    a, b = star_topology(g).elements[:2]
    inter = intersection(g, a, b)
    # stars at 1 and 2 share only the edge 12
    assert inter.graph.edges == ((1, 2),)
    assert element_dimension(g, a) == 1


@pytest.mark.parametrize(
    "els",
    [
        [Element((1, 2), 3)],
        [Element((1, 9))],
        [(1, 2), (1, 2)],
        [Element(())],
    ],
)
def test_bad_subbasis(els):
    with pytest.raises(InputError):
        SubBasis(cycle(4), els)


def test_dimension_predicates():
    g = wheel(6)
    whole = dimension_predicates(g, g.vertices)
    assert whole.homogeneous and whole.maximal
    p = dimension_predicates(g, [0, 1])
    assert p.homogeneous and not p.maximal
    p = dimension_predicates(builtin("bull"), [1, 2, 3, 4, 5])
    assert not p.homogeneous
    with pytest.raises(InputError):
        dimension_predicates(g, [])


def test_json_roundtrip():
    b = subbasis("sun_arcs")
    from grafotop.formats import subbasis_from_json

    assert subbasis_from_json(b.to_json()) == b
    assert dimension_summary(b).to_json()["topological_dimension"] == "1"
