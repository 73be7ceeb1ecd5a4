# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled sign-vector kernels for ground sets of at most 64 elements.

Same signatures and results as ``_pykernels``.
"""
import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free, qsort

cnp.import_array()

MAX_GROUND = 64


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int popcount(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef inline int lowbit(uint64_t x) nogil:
    return __builtin_ctzll(x)


cdef struct Pair:
    uint64_t p
    uint64_t m


cdef int _cmp_pair(const void* a, const void* b) noexcept nogil:
    cdef const Pair* x = <const Pair*>a
    cdef const Pair* y = <const Pair*>b
    if x.p < y.p:
        return -1
    if x.p > y.p:
        return 1
    if x.m < y.m:
        return -1
    if x.m > y.m:
        return 1
    return 0


cdef bint _contains(Pair* sorted_pairs, Py_ssize_t m, uint64_t p, uint64_t q) noexcept nogil:
    cdef Py_ssize_t lo = 0, hi = m, mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if sorted_pairs[mid].p < p or (sorted_pairs[mid].p == p and sorted_pairs[mid].m < q):
            lo = mid + 1
        else:
            hi = mid
    return lo < m and sorted_pairs[lo].p == p and sorted_pairs[lo].m == q


cdef uint64_t[::1] _masks(seq):
    return np.asarray([int(v) for v in seq], dtype=np.uint64)


def fs_violation(plus, minus):
    cdef uint64_t[::1] P = _masks(plus)
    cdef uint64_t[::1] M = _masks(minus)
    cdef Py_ssize_t m = P.shape[0], i, j
    cdef Pair* table = <Pair*>malloc(max(m, 1) * sizeof(Pair))
    cdef uint64_t xp, xm, fr
    cdef Py_ssize_t bad_i = -1, bad_j = -1
    if table == NULL:
        raise MemoryError()
    try:
        with nogil:
            for i in range(m):
                table[i].p = P[i]
                table[i].m = M[i]
            qsort(table, m, sizeof(Pair), _cmp_pair)
            for i in range(m):
                xp = P[i]
                xm = M[i]
                fr = ~(xp | xm)
                for j in range(m):
                    if not _contains(table, m, xp | (M[j] & fr), xm | (P[j] & fr)):
                        bad_i = i
                        bad_j = j
                        break
                if bad_i >= 0:
                    break
    finally:
        free(table)
    if bad_i < 0:
        return None
    return (bad_i, bad_j)


def se_violation(plus, minus, int n):
    cdef uint64_t[::1] P = _masks(plus)
    cdef uint64_t[::1] M = _masks(minus)
    cdef Py_ssize_t m = P.shape[0], i, j, k
    cdef uint64_t full = (<uint64_t>0xFFFFFFFFFFFFFFFF) if n >= 64 else ((<uint64_t>1 << n) - 1)
    cdef uint64_t xp, xm, yp, ym, sep, keep, fr, wp, wm, cover, missing
    cdef int width, best_width = 0
    cdef Py_ssize_t bi = -1, bj = -1
    cdef int be = -1
    with nogil:
        for i in range(m):
            xp = P[i]
            xm = M[i]
            fr = ~(xp | xm)
            for j in range(m):
                yp = P[j]
                ym = M[j]
                sep = (xp & ym) | (xm & yp)
                if sep == 0:
                    continue
                width = popcount(sep)
                if width <= best_width:
                    continue
                keep = full & ~sep
                wp = (xp | (yp & fr)) & keep
                wm = (xm | (ym & fr)) & keep
                cover = 0
                for k in range(m):
                    if (P[k] & keep) == wp and (M[k] & keep) == wm:
                        cover |= ~(P[k] | M[k])
                        if (sep & ~cover) == 0:
                            break
                missing = sep & ~cover
                if missing != 0:
                    bi = i
                    bj = j
                    be = lowbit(missing)
                    best_width = width
                    if width == n:
                        break
            if best_width == n and bi >= 0:
                break
    if bi < 0:
        return None
    return (bi, bj, be)


def leq_matrix(plus, minus):
    cdef uint64_t[::1] P = _masks(plus)
    cdef uint64_t[::1] M = _masks(minus)
    cdef Py_ssize_t m = P.shape[0], i, j
    out = np.zeros((m, m), dtype=np.uint8)
    cdef cnp.uint8_t[:, ::1] O = out
    with nogil:
        for i in range(m):
            for j in range(m):
                if (P[i] & ~P[j]) == 0 and (M[i] & ~M[j]) == 0:
                    O[i, j] = 1
    return out.astype(bool)


def salvetti_relation(xp, xm, tp, tm):
    cdef uint64_t[::1] XP = _masks(xp)
    cdef uint64_t[::1] XM = _masks(xm)
    cdef uint64_t[::1] TP = _masks(tp)
    cdef uint64_t[::1] TM = _masks(tm)
    cdef Py_ssize_t m = XP.shape[0], i, j
    cdef uint64_t fr
    out = np.zeros((m, m), dtype=np.uint8)
    cdef cnp.uint8_t[:, ::1] O = out
    with nogil:
        for i in range(m):
            for j in range(m):
                if (XP[i] & ~XP[j]) != 0 or (XM[i] & ~XM[j]) != 0:
                    continue
                fr = ~(XP[j] | XM[j])
                if (XP[j] | (TP[i] & fr)) == TP[j] and (XM[j] | (TM[i] & fr)) == TM[j]:
                    O[i, j] = 1
    return out.astype(bool)
