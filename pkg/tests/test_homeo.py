import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from grafotop.errors import InputError
from grafotop.figures import subbasis
from grafotop.graph import Graph, is_isomorphic, random_graph
from grafotop.homeo import (
    NerveMap,
    TopologicalGraph,
    chain_normal_form,
    check_continuous,
    check_homeomorphic,
    graphs_equivalent,
    is_one_homeomorphic,
    product_topology_experiment,
    spectrum,
    strategy_topology,
    subdivide_edge,
    subdivision_topology,
    suppression_normal_form,
)
from grafotop.homotopy import Verdict
from grafotop.invariants import euler_characteristic
from grafotop.library import complete, cube, cycle, icosahedron, octahedron, path, petersen, star, utility, wheel
from grafotop.topology import indiscrete_topology, nerve, star_topology, validate


def T(b):
    return TopologicalGraph(b)


def test_necklaces_homeomorphic():
    m = check_homeomorphic(T(subbasis("necklace_small")), T(subbasis("necklace_large")))
    assert m is not None
    assert m.assignment == {i: i for i in range(6)}
    assert check_continuous(m)
    assert spectrum(T(subbasis("necklace_small"))) == sorted(Fraction(x) for x in (1, 2, 1, 2, 1, 3))


def test_c4_and_c5_covers():
    assert check_homeomorphic(T(subbasis("c4_windows")), T(subbasis("c5_cover"))) is not None
    # different spectra: weights block the nerve isomorphism
    assert check_homeomorphic(T(subbasis("c4_windows")), T(subbasis("pyramid_cover"))) is None


def test_invalid_side_rejected():
    with pytest.raises(InputError):
        check_homeomorphic(T(subbasis("c6_thirds")), T(subbasis("c6_windows")))


def test_continuity():
    n = nerve(subbasis("c6_windows"))
    assert check_continuous(NerveMap(n, n, {i: (i + 1) % 6 for i in range(6)}))
    assert not check_continuous(NerveMap(n, n, {i: (2 * i) % 6 for i in range(6)}))
    assert not check_continuous(NerveMap(n, n, {0: 0}))
    # collapsing onto a single node is continuous
    assert check_continuous(NerveMap(n, n, {i: 0 for i in range(6)}))


@pytest.mark.parametrize(
    "g, h, verdict",
    [
        (wheel(5), wheel(7), Verdict.YES),
        (complete(3), wheel(5), Verdict.YES),
        # the curated topologies differ in size or weights
        (cycle(5), cycle(7), Verdict.UNKNOWN),
        (complete(3), complete(4), Verdict.UNKNOWN),
        (cycle(5), path(4), Verdict.NO),
        (octahedron(), cycle(6), Verdict.NO),
    ],
)
def test_graphs_equivalent(g, h, verdict):
    assert graphs_equivalent(g, h).verdict is verdict


def test_icosahedron_octahedron_equivalent():
    res = graphs_equivalent(icosahedron(), octahedron())
    assert res.is_yes
    assert res.details["strategies"] == ["optimized_star", "unit_ball"]


def test_strategies():
    with pytest.raises(InputError):
        strategy_topology(cycle(4), "bogus")
    with pytest.raises(InputError):
        graphs_equivalent(cycle(4), cycle(5), strategies=["bogus"])
    assert strategy_topology(cycle(4), "indiscrete") == indiscrete_topology(cycle(4))


# -- edge subdivision -----------------------------------------------------------------


def test_subdivide_and_suppress():
    g = subdivide_edge(cycle(4), (1, 2))
    assert g.order == 5 and g.has_edge(1, 5) and g.has_edge(5, 2)
    assert is_isomorphic(suppression_normal_form(g), suppression_normal_form(cycle(4))) is not None
    with pytest.raises(InputError):
        subdivide_edge(cycle(4), (1, 3))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(2, 8), st.integers(1, 4))
def test_subdivisions_are_one_homeomorphic(seed, n, k):
    rng = random.Random(seed)
    g = random_graph(n, 0.5, rng)
    if not g.edges:
        return
    h = g
    for _ in range(k):
        h = subdivide_edge(h, rng.choice(h.edges))
    perm = list(h.vertices)
    rng.shuffle(perm)
    h = h.relabel(dict(zip(h.vertices, perm)))
    assert is_one_homeomorphic(g, h).is_yes


@pytest.mark.parametrize(
    "a, b, reason",
    [
        (cycle(4), Graph([1, 2, 3, 4], [(1, 2), (3, 4)]), "component"),
        (cycle(4), path(4), "cyclomatic"),
        (star(3), path(4), "degrees"),
    ],
)
def test_one_homeomorphic_no(a, b, reason):
    res = is_one_homeomorphic(a, b)
    assert res.is_no and reason in res.reason


def test_k4_and_its_subdivisions():
    k4 = complete(4)
    h = subdivide_edge(subdivide_edge(k4, (1, 2)), (3, 4))
    assert is_one_homeomorphic(k4, h).is_yes
    assert is_one_homeomorphic(h, k4).is_yes


@pytest.mark.parametrize("g", [cycle(7), petersen(), utility(), cube(), star(4), path(5)])
def test_subdivision_topology(g):
    b = subdivision_topology(g)
    assert validate(b).ok
    nf, chains = chain_normal_form(g)
    n = nerve(b)
    assert set(n.weights) == {Fraction(1)}
    if nf.order > 1 and len(b) == nf.order:
        assert is_isomorphic(n.graph, nf) is not None


def test_subdivision_topology_needs_triangle_free():
    with pytest.raises(InputError):
        subdivision_topology(complete(3))


def test_subdivided_graphs_homeomorphic_topologies():
    g = utility()
    h = subdivide_edge(subdivide_edge(g, g.edges[0]), g.edges[3])
    assert check_homeomorphic(T(subdivision_topology(g)), T(subdivision_topology(h))) is not None


def test_product_experiment():
    a = T(star_topology(cycle(4)))
    b = T(indiscrete_topology(complete(2)))
    g, pb, rep = product_topology_experiment(a, b)
    assert is_isomorphic(g, cube()) is not None
    assert euler_characteristic(g) == -4
    assert rep.overall is Verdict.NO
    assert len(pb) == 4
