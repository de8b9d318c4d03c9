"""Independent brute-force oracles, built on networkx and sympy rather than the package."""

from fractions import Fraction
from functools import lru_cache
from itertools import permutations

import networkx as nx
import pytest
import sympy

from grafotop.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


def oracle_dim(h: nx.Graph) -> Fraction:
    @lru_cache(maxsize=None)
    def dim(nodes: frozenset) -> Fraction:
        if not nodes:
            return Fraction(-1)
        total = Fraction(0)
        for v in nodes:
            total += 1 + dim(frozenset(h.neighbors(v)) & nodes)
        return total / len(nodes)

    return dim(frozenset(h.nodes))


def oracle_cliques(h: nx.Graph):
    return [tuple(sorted(c)) for c in nx.enumerate_all_cliques(h)]


def oracle_chi(h: nx.Graph) -> int:
    return sum((-1) ** (len(c) - 1) for c in oracle_cliques(h))


def oracle_betti(h: nx.Graph) -> list[int]:
    """Betti numbers from sympy ranks of boundary matrices."""
    by_size: dict[int, list] = {}
    for c in oracle_cliques(h):
        by_size.setdefault(len(c), []).append(c)
    top = max(by_size, default=0)
    ranks = {}
    for k in range(2, top + 1):
        rows, cols = by_size[k], by_size[k - 1]
        idx = {c: i for i, c in enumerate(cols)}
        m = sympy.zeros(len(rows), len(cols))
        for i, c in enumerate(rows):
            for j in range(k):
                m[i, idx[c[:j] + c[j + 1:]]] = (-1) ** j
        ranks[k] = m.rank()
    out = []
    for k in range(1, top + 1):
        out.append(len(by_size[k]) - ranks.get(k + 1, 0) - ranks.get(k, 0))
    return out


def oracle_curvature(h: nx.Graph, x) -> Fraction:
    s = h.subgraph(list(h.neighbors(x)))
    counts: dict[int, int] = {}
    for c in nx.enumerate_all_cliques(s):
        counts[len(c)] = counts.get(len(c), 0) + 1
    # sum over k >= 0 of (-1)^k V_(k-1)(S) / (k+1), with V_(-1) = 1
    return Fraction(1) + sum((Fraction((-1) ** k * n, k + 1) for k, n in counts.items()), Fraction(0))


def oracle_index_average(h: nx.Graph, x) -> Fraction:
    """Average over all vertex orderings of 1 - chi(lower part of S(x))."""
    nodes = list(h.nodes)
    total = Fraction(0)
    count = 0
    for perm in permutations(range(len(nodes))):
        f = dict(zip(nodes, perm))
        low = [y for y in h.neighbors(x) if f[y] < f[x]]
        total += 1 - oracle_chi(h.subgraph(low))
        count += 1
    return total / count


def oracle_contractible(h: nx.Graph) -> bool:
    """Exhaustive search for a sequence of removals of vertices with contractible spheres."""

    @lru_cache(maxsize=None)
    def contractible(nodes: frozenset) -> bool:
        if len(nodes) == 1:
            return True
        if not nodes:
            return False
        sub = h.subgraph(nodes)
        if not nx.is_connected(sub):
            return False
        for v in sorted(nodes):
            sphere = frozenset(sub.neighbors(v))
            if sphere and contractible(sphere) and contractible(nodes - {v}):
                return True
        return False

    return contractible(frozenset(h.nodes))


@pytest.fixture
def nxg():
    return to_nx
