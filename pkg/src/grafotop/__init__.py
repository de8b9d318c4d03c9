"""Topologies, homotopy and cohomology of finite simple graphs."""

from grafotop.errors import InputError, InvariantViolation
from grafotop.graph import (
    CliqueSet,
    Graph,
    enumerate_cliques,
    induced_subgraph,
    is_isomorphic,
    star_graph,
    unit_ball,
    unit_sphere,
)
from grafotop.invariants import (
    curvature,
    dimension,
    euler_characteristic,
    index_expectation,
    poincare_hopf_check,
    poincare_hopf_index,
    relative_dimension,
)
from grafotop.cohomology import betti_numbers, betti_vector
from grafotop.fixedpoint import fixed_invariant_set, lefschetz_number
from grafotop.homeo import TopologicalGraph, check_homeomorphic, graphs_equivalent, is_one_homeomorphic
from grafotop.homotopy import Verdict, homotopy_equivalent, is_contractible
from grafotop.kernels import BACKEND
from grafotop.optimize import optimize
from grafotop.topology import Element, SubBasis, dimension_summary, nerve, star_topology, validate

__version__ = "0.1.0"
