"""Inductive dimension, Euler characteristic, curvature and Poincare-Hopf indices.

Everything here is exact; rationals are ``fractions.Fraction``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping

from grafotop import kernels
from grafotop.errors import InputError
from grafotop.graph import Graph, clique_counts, mask_clique_counts

MINUS_ONE = Fraction(-1)


def dim_of_mask(g: Graph, mask: int) -> Fraction:
    """Inductive dimension of the subgraph of ``g`` induced on ``mask``.

    Results are memoized on ``g``; spheres of spheres recur a lot.
    """
    memo = g._cache.setdefault("dim", {0: MINUS_ONE})
    got = memo.get(mask)
    if got is not None:
        return got
    masks = g.masks
    # iterative post-order so deep sphere chains do not hit the recursion limit
    stack = [mask]
    while stack:
        m = stack[-1]
        if m in memo:
            stack.pop()
            continue
        pending = []
        total = Fraction(0)
        rest = m
        while rest:
            low = rest & -rest
            rest ^= low
            s = masks[low.bit_length() - 1] & m
            d = memo.get(s)
            if d is None:
                pending.append(s)
            elif not pending:
                total += 1 + d
        if pending:
            stack.extend(pending)
            continue
        memo[m] = total / bin(m).count("1")
        stack.pop()
    return memo[mask]


def dimension(g: Graph) -> Fraction:
    return dim_of_mask(g, g.full_mask)


def sphere_dimension(g: Graph, x: int) -> Fraction:
    """``dim(S(x))`` with the sphere taken in ``g``."""
    g.check_vertex(x)
    return dim_of_mask(g, g.masks[g.pos[x]])


def local_dimension(g: Graph, x: int) -> Fraction:
    """``1 + dim(S(x))``: the contribution of ``x`` to ``dim(g)``."""
    return 1 + sphere_dimension(g, x)


def relative_dimension(g: Graph, w: Iterable[int]) -> Fraction:
    """Mean of ``dim(S(x))`` over ``x`` in ``w``, spheres taken in ``g``."""
    ws = sorted(set(w))
    if not ws:
        raise InputError("relative dimension of an empty vertex set")
    return sum((sphere_dimension(g, x) for x in ws), Fraction(0)) / len(ws)


def euler_characteristic(g: Graph) -> int:
    return sum((-1) ** k * n for k, n in enumerate(clique_counts(g)))


def curvature(g: Graph, x: int) -> Fraction:
    g.check_vertex(x)
    counts = mask_clique_counts(g, g.masks[g.pos[x]])
    k = Fraction(1)
    for j, n in enumerate(counts):
        # V_j enters with sign (-1)^(j+1) and weight 1/(j+2)
        k += Fraction((-1) ** (j + 1) * n, j + 2)
    return k


def gauss_bonnet(g: Graph) -> tuple[Fraction, int]:
    """Total curvature and Euler characteristic; they must agree."""
    return sum((curvature(g, x) for x in g.vertices), Fraction(0)), euler_characteristic(g)


def _check_injective(g: Graph, f: Mapping[int, object]) -> None:
    missing = [v for v in g.vertices if v not in f]
    if missing:
        raise InputError(f"function undefined at vertices {missing}")
    vals = [f[v] for v in g.vertices]
    if len(set(vals)) != len(vals):
        raise InputError("function is not injective")


def lower_sphere(g: Graph, f: Mapping[int, object], x: int) -> tuple[int, ...]:
    return tuple(y for y in sorted(g.neighbors(x)) if f[y] < f[x])


def _index(g: Graph, f, x: int) -> int:
    low = lower_sphere(g, f, x)
    counts = mask_clique_counts(g, g.mask(low))
    return 1 - sum((-1) ** k * n for k, n in enumerate(counts))


def poincare_hopf_index(g: Graph, f: Mapping[int, object], x: int) -> int:
    g.check_vertex(x)
    _check_injective(g, f)
    return _index(g, f, x)


@dataclass(frozen=True)
class MorseData:
    f: dict
    lower: dict
    index: dict

    @property
    def critical_points(self) -> list[int]:
        return [x for x, i in self.index.items() if i != 0]


def morse_data(g: Graph, f: Mapping[int, object]) -> MorseData:
    _check_injective(g, f)
    return MorseData(
        f=dict(f),
        lower={x: lower_sphere(g, f, x) for x in g.vertices},
        index={x: _index(g, f, x) for x in g.vertices},
    )


@dataclass(frozen=True)
class PoincareHopfReport:
    sum: int
    chi: int

    @property
    def equal(self) -> bool:
        return self.sum == self.chi


def poincare_hopf_check(g: Graph, f: Mapping[int, object]) -> PoincareHopfReport:
    _check_injective(g, f)
    total = sum(_index(g, f, x) for x in g.vertices)
    return PoincareHopfReport(total, euler_characteristic(g))


def random_injective_function(g: Graph, rng: random.Random) -> dict[int, int]:
    ranks = list(range(g.order))
    rng.shuffle(ranks)
    return dict(zip(g.vertices, ranks))


def _sphere_cliques(g: Graph, x: int):
    """Cliques of ``S(x)`` as bitmasks over the sphere's own ``0..d-1`` indexing."""
    sphere_mask = g.masks[g.pos[x]]
    idx = []
    m = sphere_mask
    while m:
        low = m & -m
        idx.append(low.bit_length() - 1)
        m ^= low
    local = {v: i for i, v in enumerate(idx)}
    sub_masks = []
    for v in idx:
        nb = g.masks[v] & sphere_mask
        lm = 0
        while nb:
            low = nb & -nb
            lm |= 1 << local[low.bit_length() - 1]
            nb ^= low
        sub_masks.append(lm)
    grades = kernels.clique_grades(len(idx), sub_masks, -1)
    return len(idx), grades


SUBSET_TRANSFORM_LIMIT = 22


def index_expectation(g: Graph, x: int) -> Fraction:
    """Expected index ``1 - chi(S^-(x))`` over uniformly random vertex orderings.

    Given ``|S^-(x)| = k`` every ``k``-subset of the sphere is equally likely,
    and ``k`` itself is uniform on ``0..d``. Small spheres go through an
    explicit Euler characteristic table of all induced subgraphs; large ones
    use the count of cliques inside ``k``-subsets instead.
    """
    g.check_vertex(x)
    d, grades = _sphere_cliques(g, x)
    if d <= SUBSET_TRANSFORM_LIMIT:
        cmasks, signs = [], []
        for k, gr in enumerate(grades):
            s = -1 if k % 2 else 1
            for c in gr:
                m = 0
                for i in c:
                    m |= 1 << i
                cmasks.append(m)
                signs.append(s)
        chis = kernels.subset_euler(d, cmasks, signs)
        by_size = [0] * (d + 1)
        for w, chi in enumerate(chis):
            by_size[bin(w).count("1")] += 1 - chi
    else:
        by_size = []
        for k in range(d + 1):
            chi_sum = sum(
                (-1) ** j * len(gr) * comb(d - j - 1, k - j - 1) for j, gr in enumerate(grades) if j < k
            )
            by_size.append(comb(d, k) - chi_sum)
    return sum((Fraction(s, (d + 1) * comb(d, k)) for k, s in enumerate(by_size)), Fraction(0))
