"""Clique-complex cohomology: exterior derivatives, Betti numbers, Hodge and Dirac.

Each clique is oriented by its ascending vertex tuple. The coboundary is
``(d f)(x_0..x_{k+1}) = sum_j (-1)^j f(x_0..^x_j..x_{k+1})``.
"""

from __future__ import annotations

from dataclasses import dataclass

from grafotop import linalg
from grafotop.errors import InvariantViolation
from grafotop.graph import Graph, enumerate_cliques


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix with the cliques indexing its rows and columns."""

    rows: tuple[tuple[int, ...], ...]
    row_index: tuple
    col_index: tuple

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.row_index), len(self.col_index)

    def as_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape),
            "rows": [list(r) for r in self.rows],
            "row_index": [list(c) if isinstance(c, tuple) else c for c in self.row_index],
            "col_index": [list(c) if isinstance(c, tuple) else c for c in self.col_index],
        }


def _grades(g: Graph):
    return enumerate_cliques(g).grades


def _derivative_rows(g: Graph, k: int) -> list[list[int]]:
    cache = g._cache.setdefault("d", {})
    got = cache.get(k)
    if got is not None:
        return got
    grades = _grades(g)
    src = grades[k] if k < len(grades) else ()
    dst = grades[k + 1] if k + 1 < len(grades) else ()
    col = {c: i for i, c in enumerate(src)}
    rows = []
    for tau in dst:
        row = [0] * len(src)
        for j in range(len(tau)):
            row[col[tau[:j] + tau[j + 1:]]] = -1 if j % 2 else 1
        rows.append(row)
    cache[k] = rows
    return rows


def exterior_derivative(g: Graph, k: int) -> IntMatrix:
    """Matrix of ``d_k`` from grade-``k`` to grade-``k+1`` cochains."""
    if k < 0:
        raise ValueError("grade must be nonnegative")
    grades = _grades(g)
    src = grades[k] if k < len(grades) else ()
    dst = grades[k + 1] if k + 1 < len(grades) else ()
    return IntMatrix(tuple(tuple(r) for r in _derivative_rows(g, k)), tuple(dst), tuple(src))


def derivative_rank(g: Graph, k: int) -> int:
    if k < 0:
        return 0
    cache = g._cache.setdefault("rank", {})
    if k not in cache:
        grades = _grades(g)
        ncols = len(grades[k]) if k < len(grades) else 0
        cache[k] = linalg.rank(_derivative_rows(g, k), ncols)
    return cache[k]


@dataclass(frozen=True)
class CohomologyProfile:
    betti: tuple[int, ...]
    counts: tuple[int, ...]
    chi_combinatorial: int
    chi_cohomological: int

    def to_json(self) -> dict:
        return {
            "betti": list(self.betti),
            "counts": list(self.counts),
            "chi_combinatorial": self.chi_combinatorial,
            "chi_cohomological": self.chi_cohomological,
        }


def betti_numbers(g: Graph) -> CohomologyProfile:
    counts = tuple(len(gr) for gr in _grades(g))
    betti = tuple(v - derivative_rank(g, k) - derivative_rank(g, k - 1) for k, v in enumerate(counts))
    chi_c = sum((-1) ** k * v for k, v in enumerate(counts))
    chi_h = sum((-1) ** k * b for k, b in enumerate(betti))
    if chi_c != chi_h or any(b < 0 for b in betti):
        raise InvariantViolation(f"Euler-Poincare failed: counts {counts}, betti {betti}")
    return CohomologyProfile(betti, counts, chi_c, chi_h)


def betti_vector(g: Graph) -> tuple[int, ...]:
    """Betti numbers with trailing zeros dropped, so vectors compare across graphs."""
    b = list(betti_numbers(g).betti)
    while b and b[-1] == 0:
        b.pop()
    return tuple(b)


def hodge_laplacian(g: Graph, k: int) -> IntMatrix:
    """``L_k = d_k^T d_k + d_{k-1} d_{k-1}^T`` on grade-``k`` cochains."""
    grades = _grades(g)
    src = grades[k] if k < len(grades) else ()
    n = len(src)
    dk = _derivative_rows(g, k)
    up = linalg.matmul(linalg.transpose(dk, n), dk, len(dk)) if dk else [[0] * n for _ in range(n)]
    if k > 0:
        dprev = _derivative_rows(g, k - 1)
        nprev = len(grades[k - 1])
        down = linalg.matmul(dprev, linalg.transpose(dprev, nprev), nprev) if nprev else [[0] * n for _ in range(n)]
    else:
        down = [[0] * n for _ in range(n)]
    rows = tuple(tuple(up[i][j] + down[i][j] for j in range(n)) for i in range(n))
    return IntMatrix(rows, tuple(src), tuple(src))


def hodge_nullity(g: Graph, k: int) -> int:
    lap = hodge_laplacian(g, k)
    n = lap.shape[0]
    return n - linalg.rank(lap.as_lists(), n)


def dirac_operator(g: Graph) -> IntMatrix:
    """``D = d + d^T`` on the direct sum of all cochain grades."""
    grades = _grades(g)
    index = tuple(c for gr in grades for c in gr)
    offsets = []
    off = 0
    for gr in grades:
        offsets.append(off)
        off += len(gr)
    n = off
    mat = [[0] * n for _ in range(n)]
    for k in range(len(grades) - 1):
        for i, row in enumerate(_derivative_rows(g, k)):
            for j, x in enumerate(row):
                if x:
                    mat[offsets[k + 1] + i][offsets[k] + j] = x
                    mat[offsets[k] + j][offsets[k + 1] + i] = x
    return IntMatrix(tuple(tuple(r) for r in mat), index, index)


def dirac_square_is_block_diagonal(g: Graph) -> bool:
    """True iff ``D^2`` vanishes off the grade blocks and equals ``L_k`` on them."""
    d = dirac_operator(g).as_lists()
    n = len(d)
    sq = linalg.matmul(d, d, n)
    grades = _grades(g)
    off = 0
    for k, gr in enumerate(grades):
        m = len(gr)
        lap = hodge_laplacian(g, k).rows
        for i in range(m):
            row = sq[off + i]
            for j in range(n):
                inside = off <= j < off + m
                expect = lap[i][j - off] if inside else 0
                if row[j] != expect:
                    return False
        off += m
    return True


def d_squared_is_zero(g: Graph) -> bool:
    grades = _grades(g)
    for k in range(len(grades) - 2):
        a = _derivative_rows(g, k + 1)
        b = _derivative_rows(g, k)
        if a and b and not linalg.is_zero(linalg.matmul(a, b, len(b))):
            return False
    return True


@dataclass(frozen=True)
class EulerPoincareReport:
    combinatorial: int
    cohomological: int

    @property
    def equal(self) -> bool:
        return self.combinatorial == self.cohomological


def euler_poincare_check(g: Graph) -> EulerPoincareReport:
    """Clique counts on one side, Betti numbers as harmonic-form counts on the other.

    Betti numbers from ranks of ``d`` telescope to the clique count sum by
    algebra alone, so the right side uses nullities of the Hodge Laplacians.
    """
    counts = [len(gr) for gr in _grades(g)]
    comb = sum((-1) ** k * v for k, v in enumerate(counts))
    harmonic = sum((-1) ** k * hodge_nullity(g, k) for k in range(len(counts)))
    return EulerPoincareReport(comb, harmonic)
