"""Small exact linear algebra over the rationals (dense, list-of-lists)."""

from __future__ import annotations

from fractions import Fraction

from grafotop import kernels


def rank(rows: list[list[int]], ncols: int) -> int:
    """Rank of an integer matrix."""
    return kernels.integer_rank(rows, ncols)


def matmul(a: list[list], b: list[list], inner: int | None = None) -> list[list]:
    if not a:
        return []
    n = len(b) if inner is None else inner
    m = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [0] * m
        for k in range(n):
            x = row[k]
            if x:
                bk = b[k]
                for j in range(m):
                    if bk[j]:
                        acc[j] += x * bk[j]
        out.append(acc)
    return out


def transpose(a: list[list], ncols: int | None = None) -> list[list]:
    if not a:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*a)]


def is_zero(a: list[list]) -> bool:
    return all(not any(r) for r in a)


def rref(rows: list[list], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (nonzero rows, pivot columns)."""
    m = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        m[r] = [x / p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                mi, mr = m[i], m[r]
                m[i] = [mi[j] - f * mr[j] for j in range(ncols)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(rows: list[list], ncols: int) -> list[list[Fraction]]:
    """Basis of ``{v : A v = 0}``."""
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * ncols
        v[fcol] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[fcol]
        basis.append(v)
    return basis


def column_space_basis(cols: list[list], dim: int) -> list[list[Fraction]]:
    """A maximal independent subset of the given vectors (each of length ``dim``)."""
    if not cols:
        return []
    # vectors as columns of a matrix; pivot columns of its rref pick a basis
    mat = [[cols[j][i] for j in range(len(cols))] for i in range(dim)]
    _, pivots = rref(mat, len(cols))
    return [[Fraction(x) for x in cols[j]] for j in pivots]


def solve_coordinates(basis: list[list[Fraction]], v: list) -> list[Fraction]:
    """Coordinates of ``v`` in the span of ``basis`` (which must be independent)."""
    dim = len(v)
    k = len(basis)
    aug = [[basis[j][i] for j in range(k)] + [Fraction(v[i])] for i in range(dim)]
    red, pivots = rref(aug, k + 1)
    if k in pivots:
        raise ValueError("vector is not in the span")
    coords = [Fraction(0)] * k
    for row, pc in zip(red, pivots):
        coords[pc] = row[k]
    return coords
