"""Automorphisms acting on cliques, Lefschetz numbers and invariant element families."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from grafotop import linalg
from grafotop.cohomology import IntMatrix, _derivative_rows, betti_numbers
from grafotop.errors import InputError, InvariantViolation
from grafotop.graph import Graph, automorphisms, enumerate_cliques, is_automorphism
from grafotop.topology import Element, SubBasis, WeightedNerve, element_graph, nerve, validate


def nerve_automorphisms(n: WeightedNerve) -> list[dict[int, int]]:
    """All weight-preserving automorphisms of a nerve, identity first."""
    autos = automorphisms(n.graph, n.labels)
    ident = {v: v for v in n.graph.vertices}
    autos.sort(key=lambda f: (f != ident, [f[v] for v in n.graph.vertices]))
    return autos


def _sort_sign(seq) -> int:
    """Sign of the permutation that sorts ``seq`` (distinct entries)."""
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def _check_auto(g: Graph, f: Mapping[int, int]) -> dict[int, int]:
    f = {int(k): int(v) for k, v in dict(f).items()}
    if not is_automorphism(g, f):
        raise InputError("map is not an automorphism of the graph")
    return f


def induced_cochain_maps(g: Graph, f: Mapping[int, int]) -> list[IntMatrix]:
    """Signed permutation matrices ``U_k`` of ``f`` on k-cliques.

    Column ``c`` has its single entry in the row of ``f(c)``; the sign is the
    parity of sorting the image tuple. The maps commute with the coboundary.
    """
    f = _check_auto(g, f)
    grades = enumerate_cliques(g).grades
    mats = []
    for cl in grades:
        idx = {c: i for i, c in enumerate(cl)}
        rows = [[0] * len(cl) for _ in cl]
        for j, c in enumerate(cl):
            img = tuple(f[v] for v in c)
            rows[idx[tuple(sorted(img))]][j] = _sort_sign(img)
        mats.append(IntMatrix(tuple(tuple(r) for r in rows), tuple(cl), tuple(cl)))
    for k in range(len(grades) - 1):
        d = _derivative_rows(g, k)
        left = linalg.matmul(d, mats[k].as_lists(), len(grades[k]))
        right = linalg.matmul(mats[k + 1].as_lists(), d, len(grades[k + 1]))
        if left != right:
            raise InvariantViolation(f"clique action does not commute with d_{k}")
    return mats


@dataclass(frozen=True)
class LefschetzReport:
    traces: tuple[int, ...]
    lefschetz: int
    cochain_supertrace: int
    fixed_simplices: tuple[tuple[tuple[int, ...], int], ...]

    @property
    def fixed_count(self) -> int:
        return sum(s for _, s in self.fixed_simplices)

    def to_json(self) -> dict:
        return {
            "traces": list(self.traces),
            "lefschetz": self.lefschetz,
            "cochain_supertrace": self.cochain_supertrace,
            "fixed_simplices": [{"clique": list(c), "sign": s} for c, s in self.fixed_simplices],
        }


def _cocycle_frame(g: Graph, k: int, n_k: int, b_k: int):
    """Cached (image size, representatives, left inverse) for grade ``k``.

    The basis is a basis of im d_(k-1) extended by ``b_k`` cocycles; the left
    inverse turns any cocycle into its coordinates in that basis.
    """
    cache = g._cache.setdefault("cocycle_frame", {})
    if k in cache:
        return cache[k]
    ker = linalg.nullspace(_derivative_rows(g, k), n_k)
    if k > 0:
        d_prev = _derivative_rows(g, k - 1)
        cols = [[d_prev[i][j] for i in range(n_k)] for j in range(len(d_prev[0]) if d_prev else 0)]
        im = linalg.column_space_basis(cols, n_k)
    else:
        im = []
    basis = linalg.column_space_basis(im + ker, n_k)
    if len(basis) - len(im) != b_k:
        raise InvariantViolation(f"kernel modulo image has wrong size in grade {k}")
    r = len(basis)
    # row-reduce [B | I]; the first r rows then read [I_r | L] with L B = I_r
    aug = [[basis[c][i] for c in range(r)] + [int(i == j) for j in range(n_k)] for i in range(n_k)]
    red, _ = linalg.rref(aug, r + n_k)
    left = [row[r:] for row in red[:r]]
    cache[k] = (len(im), basis[len(im):], left)
    return cache[k]


def _cohomology_trace(g: Graph, k: int, u: list[list[int]], n_k: int, b_k: int) -> Fraction:
    """Trace of ``u`` on ker d_k / im d_(k-1), over the rationals."""
    if b_k == 0:
        return Fraction(0)
    n_im, reps, left = _cocycle_frame(g, k, n_k, b_k)
    total = Fraction(0)
    for t, h in enumerate(reps):
        img = [sum(u[i][j] * h[j] for j in range(n_k) if u[i][j]) for i in range(n_k)]
        row = left[n_im + t]
        total += sum(row[i] * img[i] for i in range(n_k) if img[i])
    return total


def lefschetz_number(g: Graph, f: Mapping[int, int]) -> LefschetzReport:
    """Alternating sum of cohomology traces, cross-checked against the cochain level."""
    f = _check_auto(g, f)
    mats = induced_cochain_maps(g, f)
    prof = betti_numbers(g)
    traces = []
    for k, m in enumerate(mats):
        b_k = prof.betti[k] if k < len(prof.betti) else 0
        t = _cohomology_trace(g, k, m.as_lists(), len(m.col_index), b_k)
        if t.denominator != 1:
            raise InvariantViolation(f"non-integral trace {t} in grade {k}")
        traces.append(int(t))
    lef = sum((-1) ** k * t for k, t in enumerate(traces))
    sup = sum((-1) ** k * sum(m.rows[i][i] for i in range(len(m.rows))) for k, m in enumerate(mats))
    fixed = []
    for k, m in enumerate(mats):
        for i, c in enumerate(m.col_index):
            if m.rows[i][i]:
                fixed.append((c, (-1) ** k * m.rows[i][i]))
    rep = LefschetzReport(tuple(traces), lef, sup, tuple(fixed))
    if not (lef == sup == rep.fixed_count):
        raise InvariantViolation(f"trace identities disagree: {lef}, {sup}, {rep.fixed_count}")
    return rep


@dataclass(frozen=True)
class InvariantFamily:
    nodes: tuple[int, ...]
    elements: tuple[Element, ...]
    union: tuple[int, ...]
    diameter_bound: int

    def to_json(self) -> dict:
        return {
            "nodes": list(self.nodes),
            "elements": [e.to_json() for e in self.elements],
            "union": list(self.union),
            "diameter_bound": self.diameter_bound,
        }


def _diameter(g: Graph) -> int:
    best = 0
    for s in g.vertices:
        dist = {s: 0}
        frontier = [s]
        while frontier:
            nxt = []
            for x in frontier:
                for y in g.neighbors(x):
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        nxt.append(y)
            frontier = nxt
        best = max(best, max(dist.values()))
    return best


def fixed_invariant_set(b: SubBasis, a: Mapping[int, int]) -> InvariantFamily | None:
    """A nerve simplex mapped onto itself by ``a``, smallest first.

    ``a`` permutes the elements of ``b`` as an automorphism of its nerve. When
    the Lefschetz number of ``a`` is nonzero such a simplex must exist.
    ``diameter_bound`` is (nerve dimension + 1) times the largest element
    diameter, informational only.
    """
    rep = validate(b)
    if not rep.ok:
        raise InputError(f"topology is not valid ({rep.overall.value}): {list(rep.reasons)}")
    nv = nerve(b)
    a = {int(k): int(v) for k, v in dict(a).items()}
    if not is_automorphism(nv.graph, a) or any(nv.weights[i] != nv.weights[a[i]] for i in a):
        raise InputError("map is not a weight-preserving automorphism of the nerve")
    cliques = enumerate_cliques(nv.graph)
    lef = lefschetz_number(nv.graph, a).lefschetz
    for grade in cliques.grades:
        for c in grade:
            if tuple(sorted(a[i] for i in c)) == c:
                els = tuple(b.elements[i] for i in c)
                union = sorted({v for e in els for v in e.vertices})
                m = max(_diameter(element_graph(b.host, e)) for e in b.elements)
                return InvariantFamily(c, els, tuple(union), len(cliques.grades) * m)
    if lef != 0:
        raise InvariantViolation(f"Lefschetz number {lef} but no invariant nerve simplex")
    return None
