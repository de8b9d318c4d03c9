import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import oracle_chi, oracle_curvature, oracle_dim, oracle_index_average, to_nx
from grafotop.errors import InputError
from grafotop.graph import Graph, random_graph
from grafotop.invariants import (
    curvature,
    dimension,
    euler_characteristic,
    gauss_bonnet,
    index_expectation,
    local_dimension,
    lower_sphere,
    morse_data,
    poincare_hopf_check,
    poincare_hopf_index,
    random_injective_function,
    relative_dimension,
    sphere_dimension,
)
from grafotop.library import builtin, complete, corpus, cycle, dumbbell, octahedron

# dimension and Euler characteristic of the builtin corpus, frozen from the
# networkx oracles in conftest
FROZEN = {
    "bull": ("22/15", 1),
    "c4_pyramid": ("22/15", 0),
    "complete": ("4", 1),
    "cricket": ("3/2", 1),
    "cube": ("1", -4),
    "cycle": ("1", 0),
    "dart": ("7/4", 1),
    "dihedral": ("1", -6),
    "dumbbell": ("319/100", 1),
    "fly": ("2", 1),
    "fork": ("1", 1),
    "gate": ("2", 1),
    "gem": ("2", 1),
    "hex": ("2", 1),
    "hole": ("2", 0),
    "house": ("22/15", 0),
    "hypertetrahedron": ("4", 1),
    "icosahedron": ("2", 2),
    "kite": ("2", 1),
    "lollipop": ("9/4", 1),
    "octahedron": ("2", 2),
    "octahedron_chord": ("3", 1),
    "pants": ("2", -1),
    "path": ("1", 1),
    "petersen": ("1", -5),
    "prism": ("2", 2),
    "snub_cube": ("2", -4),
    "snub_octahedron": ("2", 2),
    "star": ("1", 1),
    "sun": ("1", 0),
    "tetrahedron": ("3", 1),
    "utility": ("1", -3),
    "wheel": ("2", 1),
    "necklace_large": ("15/7", 0),
    "necklace_small": ("131/60", 0),
}


@pytest.mark.parametrize("name", sorted(FROZEN))
def test_frozen_corpus_values(name):
    g = corpus()[name]
    d, chi = FROZEN[name]
    assert dimension(g) == Fraction(d)
    assert euler_characteristic(g) == chi


def test_worked_dimensions():
    assert dimension(builtin("bull")) == Fraction(22, 15)
    assert dimension(dumbbell(3, 4, 3)) == Fraction(319, 100)
    assert dimension(dumbbell(3, 7, 15)) == Fraction(319, 100)


@pytest.mark.parametrize("a, b, n", [(2, 3, 4), (3, 4, 3), (1, 5, 2), (4, 4, 6)])
def test_dumbbell_closed_form(a, b, n):
    closed = (a * a + b * b + n + Fraction(a * (a - 1), a + 1) + Fraction(b * (b - 1), b + 1)) / (a + b + n)
    assert dimension(dumbbell(a, b, n)) == closed


def test_trivial_dimensions():
    assert dimension(Graph([])) == -1
    assert dimension(Graph([5])) == 0
    assert dimension(complete(4)) == 3
    assert sphere_dimension(octahedron(), 1) == 1
    assert local_dimension(octahedron(), 1) == 2


def test_relative_dimension():
    g = octahedron()
    assert relative_dimension(g, [1, 2, 3]) == 1
    with pytest.raises(InputError):
        relative_dimension(g, [])


@pytest.mark.parametrize("seed", range(30))
def test_dimension_matches_oracle(seed):
    rng = random.Random(seed)
    g = random_graph(rng.randint(1, 9), rng.choice([0.3, 0.5, 0.7]), rng)
    h = to_nx(g)
    assert dimension(g) == oracle_dim(h)
    assert euler_characteristic(g) == oracle_chi(h)
    for x in g.vertices:
        assert curvature(g, x) == oracle_curvature(h, x)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 10), st.sampled_from([0.3, 0.5, 0.7]))
def test_gauss_bonnet(seed, n, p):
    g = random_graph(n, p, random.Random(seed))
    total, chi = gauss_bonnet(g)
    assert total == chi


@pytest.mark.parametrize("seed", range(8))
def test_index_expectation_against_all_orderings(seed):
    rng = random.Random(seed)
    g = random_graph(rng.randint(2, 6), 0.6, rng)
    h = to_nx(g)
    for x in g.vertices:
        assert index_expectation(g, x) == oracle_index_average(h, x) == curvature(g, x)


def test_index_expectation_large_sphere():
    # sphere of 24 vertices goes through the clique-count branch
    g = builtin("wheel", 24)
    assert index_expectation(g, 0) == curvature(g, 0)
    k = complete(25)
    assert index_expectation(k, 1) == curvature(k, 1) == Fraction(1, 25)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 10))
def test_poincare_hopf(seed, n):
    rng = random.Random(seed)
    g = random_graph(n, rng.choice([0.3, 0.5, 0.7]), rng)
    f = random_injective_function(g, rng)
    rep = poincare_hopf_check(g, f)
    assert rep.equal


def test_morse_on_cycle():
    g = cycle(4)
    f = {1: 0, 2: 1, 3: 3, 4: 2}
    md = morse_data(g, f)
    assert md.index == {1: 1, 2: 0, 3: -1, 4: 0}
    assert md.critical_points == [1, 3]
    assert lower_sphere(g, f, 3) == (2, 4)
    assert poincare_hopf_index(g, f, 1) == 1


def test_morse_needs_injective():
    g = cycle(4)
    with pytest.raises(InputError):
        poincare_hopf_check(g, {1: 0, 2: 0, 3: 1, 4: 2})
    with pytest.raises(InputError):
        poincare_hopf_check(g, {1: 0, 2: 1})
