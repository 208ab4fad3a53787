# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; contracts mirror ``_pure``."""

from libc.stdlib cimport malloc, free


cdef extern from *:
    int __builtin_popcountl(unsigned long)


def boundary_components_all(pairing):
    cdef int m = len(pairing)
    if m == 0:
        return 1
    cdef int *pr = <int *> malloc(m * sizeof(int))
    cdef char *seen = <char *> malloc(m)
    cdef int i, k, start, cycles = 0
    for i in range(m):
        pr[i] = pairing[i]
        seen[i] = 0
    for start in range(m):
        if seen[start]:
            continue
        cycles += 1
        k = start
        while not seen[k]:
            seen[k] = 1
            k = pr[(k + 1) % m]
    free(pr)
    free(seen)
    return cycles


def sl_state_sum(pairing):
    cdef int m = len(pairing)
    cdef int n = m // 2
    if n == 0:
        return {1: 1}
    if n > 30:
        raise ValueError("degree too large for the state-sum kernel")
    cdef int *succ_plain = <int *> malloc(m * sizeof(int))
    cdef int *succ_jump = <int *> malloc(m * sizeof(int))
    cdef int *nxt_chord = <int *> malloc(m * sizeof(int))
    cdef int *chord_of = <int *> malloc(m * sizeof(int))
    cdef char *seen = <char *> malloc(m)
    cdef long long *acc = <long long *> malloc((2 * n + 3) * sizeof(long long))
    cdef int x, k, c = 0, start, s, neg, e
    cdef unsigned long mask, nmask = (<unsigned long> 1) << n
    try:
        for x in range(m):
            if pairing[x] > x:
                chord_of[x] = c
                chord_of[<int> pairing[x]] = c
                c += 1
        for k in range(m):
            succ_plain[k] = (k + 1) % m
            succ_jump[k] = pairing[(k + 1) % m]
        for k in range(m):
            nxt_chord[k] = chord_of[(k + 1) % m]
        for k in range(2 * n + 3):
            acc[k] = 0
        for mask in range(nmask):
            for k in range(m):
                seen[k] = 0
            s = 0
            for start in range(m):
                if seen[start]:
                    continue
                s += 1
                k = start
                while not seen[k]:
                    seen[k] = 1
                    if (mask >> nxt_chord[k]) & 1:
                        k = succ_jump[k]
                    else:
                        k = succ_plain[k]
            neg = n - __builtin_popcountl(mask)
            e = s - neg  # ranges over -n .. n+1
            if neg & 1:
                acc[e + n] -= 1
            else:
                acc[e + n] += 1
        out = {}
        for k in range(2 * n + 3):
            if acc[k]:
                out[k - n] = acc[k]
        return out
    finally:
        free(succ_plain)
        free(succ_jump)
        free(nxt_chord)
        free(chord_of)
        free(seen)
        free(acc)


cdef long long _go(int i, int n, int m, int p, int *xs, int *ys, int *lo, int *hi) nogil:
    if i == n:
        return 1
    cdef int x = xs[i], y = ys[i], cx, cy, ax, ay, a, b, j, c, d
    cdef bint ok
    cdef long long total = 0
    for cx in range(p):
        ax = cx * m + x
        for cy in range(p):
            ay = cy * m + y
            if ax < ay:
                a = ax
                b = ay
            else:
                a = ay
                b = ax
            ok = True
            for j in range(i):
                c = lo[j]
                d = hi[j]
                if (a < c and c < b) != (a < d and d < b):
                    ok = False
                    break
            if ok:
                lo[i] = a
                hi[i] = b
                total += _go(i + 1, n, m, p, xs, ys, lo, hi)
    return total


def count_lifts(pairing, int p, order):
    cdef int m = len(pairing)
    cdef int n = len(order)
    if n == 0:
        return 1
    cdef int *xs = <int *> malloc(n * sizeof(int))
    cdef int *ys = <int *> malloc(n * sizeof(int))
    cdef int *lo = <int *> malloc(n * sizeof(int))
    cdef int *hi = <int *> malloc(n * sizeof(int))
    cdef int i
    cdef long long total
    for i in range(n):
        xs[i] = order[i]
        ys[i] = pairing[order[i]]
    with nogil:
        total = _go(0, n, m, p, xs, ys, lo, hi)
    free(xs)
    free(ys)
    free(lo)
    free(hi)
    return total
