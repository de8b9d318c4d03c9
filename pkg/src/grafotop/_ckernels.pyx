# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels; signatures match ``_pykernels``."""

from libc.stdlib cimport malloc, calloc, free

cdef extern from *:
    """
    static int gt_mul(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static int gt_sub(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    int gt_mul(long long a, long long b, long long *r) nogil
    int gt_sub(long long a, long long b, long long *r) nogil


def clique_grades(int n, masks, int k_max=-1):
    if n == 0 or k_max == -2:
        return []
    grades = [[(i,) for i in range(n)]]
    if k_max == 0:
        return grades

    cdef unsigned char *adj = <unsigned char *> calloc(n * n, 1)
    # cand[depth * n ...]: candidate list at each depth, ncand[depth]: its length
    cdef int *cand = <int *> malloc(n * (n + 1) * sizeof(int))
    cdef int *ncand = <int *> malloc((n + 1) * sizeof(int))
    cdef int *pos = <int *> malloc((n + 1) * sizeof(int))
    cdef int *stack = <int *> malloc((n + 1) * sizeof(int))
    if not adj or not cand or not ncand or not pos or not stack:
        free(adj); free(cand); free(ncand); free(pos); free(stack)
        raise MemoryError()
    cdef int i, j, v, w, depth, k, cnt, c
    try:
        for i in range(n):
            m = masks[i]
            for j in range(n):
                if (m >> j) & 1:
                    adj[i * n + j] = 1
        for v in range(n):
            cnt = 0
            for w in range(v + 1, n):
                if adj[v * n + w]:
                    cand[n + cnt] = w
                    cnt += 1
            if cnt == 0:
                continue
            stack[0] = v
            ncand[1] = cnt
            pos[1] = 0
            depth = 1
            while depth > 0:
                if pos[depth] >= ncand[depth]:
                    depth -= 1
                    continue
                w = cand[depth * n + pos[depth]]
                pos[depth] += 1
                stack[depth] = w
                k = depth
                if len(grades) <= k:
                    grades.append([])
                grades[k].append(tuple([stack[c] for c in range(depth + 1)]))
                if k_max >= 0 and k >= k_max:
                    continue
                cnt = 0
                for c in range(pos[depth], ncand[depth]):
                    j = cand[depth * n + c]
                    if adj[w * n + j]:
                        cand[(depth + 1) * n + cnt] = j
                        cnt += 1
                if cnt:
                    depth += 1
                    ncand[depth] = cnt
                    pos[depth] = 0
    finally:
        free(adj); free(cand); free(ncand); free(pos); free(stack)
    return grades


def integer_rank(rows, int ncols):
    """Bareiss elimination in 64-bit ints; raises OverflowError on growth."""
    kept = [r for r in rows if any(r)]
    cdef int nrows = len(kept)
    if nrows == 0 or ncols == 0:
        return 0
    cdef long long *m = <long long *> malloc(nrows * ncols * sizeof(long long))
    if not m:
        raise MemoryError()
    cdef int i, j, c, piv, rank = 0
    cdef long long p, a, prev = 1, x, y, t
    cdef bint overflow = False
    try:
        for i in range(nrows):
            r = kept[i]
            for j in range(ncols):
                m[i * ncols + j] = r[j]
        for c in range(ncols):
            if rank == nrows:
                break
            piv = -1
            for i in range(rank, nrows):
                if m[i * ncols + c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != rank:
                for j in range(ncols):
                    t = m[piv * ncols + j]
                    m[piv * ncols + j] = m[rank * ncols + j]
                    m[rank * ncols + j] = t
            p = m[rank * ncols + c]
            for i in range(rank + 1, nrows):
                a = m[i * ncols + c]
                for j in range(c + 1, ncols):
                    if gt_mul(p, m[i * ncols + j], &x):
                        overflow = True
                        break
                    if a != 0:
                        if gt_mul(a, m[rank * ncols + j], &y) or gt_sub(x, y, &x):
                            overflow = True
                            break
                    m[i * ncols + j] = x // prev
                if overflow:
                    break
                m[i * ncols + c] = 0
            if overflow:
                break
            prev = p
            rank += 1
    finally:
        free(m)
    if overflow:
        raise OverflowError("integer_rank: 64-bit overflow")
    return rank


def subset_euler(int d, clique_masks, signs):
    cdef long size = 1 << d
    cdef long long *acc = <long long *> calloc(size, sizeof(long long))
    if not acc:
        raise MemoryError()
    cdef long w, bit
    cdef int b
    try:
        for cm, s in zip(clique_masks, signs):
            acc[<long> cm] += <long long> s
        for b in range(d):
            bit = 1 << b
            for w in range(size):
                if w & bit:
                    acc[w] += acc[w ^ bit]
        out = [acc[w] for w in range(size)]
    finally:
        free(acc)
    return out
