import random

import pytest
from hypothesis import given, settings, strategies as st

from grafotop.errors import InputError
from grafotop.figures import subbasis
from grafotop.fixedpoint import (
    fixed_invariant_set,
    induced_cochain_maps,
    lefschetz_number,
    nerve_automorphisms,
)
from grafotop.graph import automorphisms, random_graph
from grafotop.invariants import euler_characteristic
from grafotop.library import complete, corpus, cycle, octahedron
from grafotop.topology import nerve, star_topology


def test_triangle_signs():
    g = complete(3)
    rot = induced_cochain_maps(g, {1: 2, 2: 3, 3: 1})
    assert rot[2].as_lists() == [[1]]
    swap = induced_cochain_maps(g, {1: 2, 2: 1, 3: 3})
    assert swap[2].as_lists() == [[-1]]


@pytest.mark.parametrize(
    "f, lef",
    [
        ({1: 6, 6: 1, 2: 5, 5: 2, 3: 4, 4: 3}, 0),  # antipodal
        ({1: 1, 6: 6, 2: 3, 3: 5, 5: 4, 4: 2}, 2),  # quarter turn about an axis
    ],
)
def test_octahedron_maps(f, lef):
    g = octahedron()
    # opposite pairs are 1-6, 2-5, 3-4
    assert not g.has_edge(1, 6) and not g.has_edge(2, 5) and not g.has_edge(3, 4)
    rep = lefschetz_number(g, f)
    assert rep.lefschetz == lef == rep.cochain_supertrace == rep.fixed_count


@pytest.mark.parametrize("name", ["octahedron", "cube", "petersen", "wheel", "icosahedron", "hole"])
def test_identity_gives_chi(name):
    g = corpus()[name]
    rep = lefschetz_number(g, {v: v for v in g.vertices})
    assert rep.lefschetz == euler_characteristic(g)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.integers(2, 8))
def test_trace_identities_random(seed, n):
    g = random_graph(n, 0.5, random.Random(seed))
    for f in automorphisms(g)[:20]:
        rep = lefschetz_number(g, f)
        assert rep.lefschetz == rep.cochain_supertrace == rep.fixed_count


def test_rejects_non_automorphism():
    with pytest.raises(InputError):
        lefschetz_number(cycle(5), {1: 2, 2: 1, 3: 3, 4: 4, 5: 5})


def test_nerve_automorphisms_identity_first():
    autos = nerve_automorphisms(nerve(subbasis("c6_windows")))
    assert len(autos) == 12
    assert autos[0] == {i: i for i in range(6)}
    # the weights 1,2,1,2,1,3 leave only the reflection through the weight-3 node
    assert len(nerve_automorphisms(nerve(subbasis("necklace_small")))) == 2


def test_invariant_family_on_sun_arcs():
    b = subbasis("sun_arcs")
    autos = nerve_automorphisms(nerve(b))
    found = 0
    for a in autos:
        lef = lefschetz_number(nerve(b).graph, a).lefschetz
        fam = fixed_invariant_set(b, a)
        if lef:
            assert fam is not None
        if fam is not None:
            found += 1
            assert sorted(a[i] for i in fam.nodes) == list(fam.nodes)
            # the chosen elements meet pairwise
            for x in fam.elements:
                for y in fam.elements:
                    assert set(x.vertices) & set(y.vertices)
    assert found >= 1


def test_invariant_family_identity():
    b = star_topology(octahedron())
    fam = fixed_invariant_set(b, {i: i for i in range(6)})
    assert len(fam.nodes) == 1


def test_invariant_family_rejects():
    with pytest.raises(InputError):
        fixed_invariant_set(subbasis("c6_thirds"), {0: 0, 1: 1, 2: 2})
    with pytest.raises(InputError):
        fixed_invariant_set(subbasis("c6_windows"), {0: 1, 1: 0, 2: 2, 3: 3, 4: 4, 5: 5})


def test_rotation_of_c6_windows_has_no_fixed_family():
    b = subbasis("c6_windows")
    rot = {i: (i + 1) % 6 for i in range(6)}
    assert lefschetz_number(nerve(b).graph, rot).lefschetz == 0
    assert fixed_invariant_set(b, rot) is None
