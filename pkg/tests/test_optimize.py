import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from grafotop.errors import InputError
from grafotop.figures import subbasis
from grafotop.graph import random_graph
from grafotop.homotopy import Verdict
from grafotop.library import c4_pyramid, cycle, octahedron, wheel
from grafotop.optimize import candidate_moves, is_locally_optimal, optimize, subfamily_intersections
from grafotop.topology import SubBasis, dimension_functional, star_topology, unit_ball_topology, validate

# (host, functional before, functional after, number of elements after), frozen
CASES = {
    "c6": (cycle(6), "0", "0", 6),
    "w6": (wheel(6), "1", "0", 1),
    "c4_pyramid": (c4_pyramid(), "43/90", "11/72", 4),
}


@pytest.mark.parametrize("name", sorted(CASES))
def test_optimize_star_topologies(name):
    g, before, after, size = CASES[name]
    res = optimize(star_topology(g))
    assert res.functional_before == Fraction(before)
    assert res.functional_after == Fraction(after)
    assert len(res.subbasis) == size
    assert res.local_optimum and res.minimal and not res.budget_exhausted
    assert validate(res.subbasis).ok
    assert is_locally_optimal(res.subbasis)


def test_functional_monotone_along_trace():
    res = optimize(star_topology(c4_pyramid()))
    values = [res.functional_before] + [Fraction(m["functional"]) for m in res.trace]
    assert all(b <= a for a, b in zip(values, values[1:]))


def test_budget_stops_search():
    res = optimize(star_topology(c4_pyramid()), budget=1)
    assert res.budget_exhausted and res.evaluations == 1
    assert validate(res.subbasis).ok


def test_invalid_start_rejected():
    with pytest.raises(InputError):
        optimize(subbasis("c6_thirds"))


def test_unpacking_and_json():
    basis, trace = optimize(star_topology(cycle(6)))
    assert basis == star_topology(cycle(6)) and trace == []
    assert optimize(star_topology(cycle(6))).to_json()["functional_after"] == "0"


def test_candidate_moves_deterministic():
    b = star_topology(c4_pyramid())
    first = [d for d, _ in candidate_moves(b)]
    assert first == [d for d, _ in candidate_moves(b)]
    assert first[0].startswith("delete")


@settings(max_examples=12, deadline=None)
@given(st.integers(0, 10**6), st.integers(2, 7))
def test_optimize_random(seed, n):
    g = random_graph(n, 0.5, random.Random(seed))
    b = star_topology(g)
    res = optimize(b, budget=300)
    assert res.functional_after <= dimension_functional(b)
    assert validate(res.subbasis).ok


def test_subfamily_intersections():
    assert subfamily_intersections(unit_ball_topology(octahedron())) is Verdict.NO
    assert subfamily_intersections(subbasis("c6_windows")) is Verdict.YES
