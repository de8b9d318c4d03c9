"""Pure-Python versions of the hot kernels.

Every function here has a twin with the same signature in ``_ckernels.pyx``.
Graphs reach the kernels in index form: vertices are ``0..n-1`` and
``masks[i]`` is the neighbourhood of vertex ``i`` as an int bitmask.
"""


def clique_grades(n, masks, k_max=-1):
    """All cliques as ascending index tuples, grouped by grade.

    Grade ``k`` holds the ``(k+1)``-vertex cliques in lexicographic order.
    ``k_max < 0`` means no limit.
    """
    if n == 0 or k_max == -2:
        return []
    grades = [[(i,) for i in range(n)]]
    if k_max == 0:
        return grades

    def extend(clique, cand):
        k = len(clique)  # grade of the extension
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            c = clique + (v,)
            if len(grades) <= k:
                grades.append([])
            grades[k].append(c)
            if k_max < 0 or k < k_max:
                nxt = cand & masks[v]
                if nxt:
                    extend(c, nxt)

    for v in range(n):
        up = masks[v] >> (v + 1) << (v + 1)
        if up:
            extend((v,), up)
    return grades


def integer_rank(rows, ncols):
    """Rank over Q of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows if any(r)]
    nrows = len(m)
    rank = 0
    prev = 1
    for c in range(ncols):
        if rank == nrows:
            break
        piv = None
        for i in range(rank, nrows):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != rank:
            m[piv], m[rank] = m[rank], m[piv]
        prow = m[rank]
        p = prow[c]
        for i in range(rank + 1, nrows):
            row = m[i]
            a = row[c]
            if a:
                for j in range(c + 1, ncols):
                    row[j] = (p * row[j] - a * prow[j]) // prev
            else:
                for j in range(c + 1, ncols):
                    if row[j]:
                        row[j] = (p * row[j]) // prev
            row[c] = 0
        prev = p
        rank += 1
    return rank


def subset_euler(d, clique_masks, signs):
    """Euler characteristic of every induced subgraph of a ``d``-vertex graph.

    ``clique_masks`` lists the cliques as bitmasks and ``signs`` their
    ``(-1)**grade``. Entry ``W`` of the result is ``chi`` of the subgraph
    induced on the vertex bitmask ``W`` (a subset-sum transform).
    """
    size = 1 << d
    acc = [0] * size
    for c, s in zip(clique_masks, signs):
        acc[c] += s
    for b in range(d):
        bit = 1 << b
        for w in range(size):
            if w & bit:
                acc[w] += acc[w ^ bit]
    return acc
