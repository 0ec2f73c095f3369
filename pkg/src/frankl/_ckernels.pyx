# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops.  Same contracts as ``_pykernels``; masks must fit
in 64 bits (callers route wider universes to the Python fallback)."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free, qsort

BACKEND = "cython"


cdef int _cmp_u64(const void *a, const void *b) noexcept nogil:
    cdef uint64_t x = (<uint64_t *>a)[0]
    cdef uint64_t y = (<uint64_t *>b)[0]
    return (x > y) - (x < y)


cdef bint _bsearch(uint64_t *arr, Py_ssize_t m, uint64_t key) noexcept nogil:
    cdef Py_ssize_t lo = 0, hi = m, mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if arr[mid] < key:
            lo = mid + 1
        elif arr[mid] > key:
            hi = mid
        else:
            return True
    return False


cdef uint64_t *_load(object masks, Py_ssize_t m) except NULL:
    cdef uint64_t *buf = <uint64_t *>malloc((m if m > 0 else 1) * sizeof(uint64_t))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(m):
        buf[i] = <uint64_t>masks[i]
    return buf


def union_violation(masks):
    cdef Py_ssize_t m = len(masks), i, j
    cdef uint64_t *buf = _load(masks, m)
    cdef uint64_t *srt = _load(masks, m)
    cdef object result = None
    try:
        qsort(srt, m, sizeof(uint64_t), _cmp_u64)
        for i in range(m):
            for j in range(i + 1, m):
                if not _bsearch(srt, m, buf[i] | buf[j]):
                    result = (i, j)
                    return result
        return result
    finally:
        free(buf)
        free(srt)


def cover_pairs(masks):
    cdef Py_ssize_t m = len(masks), i, j, k, nb, p, q
    cdef uint64_t *buf = _load(masks, m)
    cdef Py_ssize_t *below = <Py_ssize_t *>malloc((m if m > 0 else 1) * sizeof(Py_ssize_t))
    cdef uint64_t a, b
    cdef bint covered
    pairs = []
    try:
        for j in range(m):
            b = buf[j]
            nb = 0
            for i in range(j):
                if buf[i] & b == buf[i]:
                    below[nb] = i
                    nb += 1
            for p in range(nb):
                a = buf[below[p]]
                covered = True
                for q in range(p + 1, nb):
                    if buf[below[q]] & a == a:
                        covered = False
                        break
                if covered:
                    pairs.append((below[p], j))
        return pairs
    finally:
        free(buf)
        free(below)


def heights(masks):
    cdef Py_ssize_t m = len(masks), i, j
    cdef uint64_t *buf = _load(masks, m)
    cdef long *h = <long *>malloc((m if m > 0 else 1) * sizeof(long))
    cdef long best
    try:
        for j in range(m):
            best = 0
            for i in range(j):
                if buf[i] & buf[j] == buf[i] and h[i] + 1 > best:
                    best = h[i] + 1
            h[j] = best
        return [h[j] for j in range(m)]
    finally:
        free(buf)
        free(h)


def coheights(masks):
    cdef Py_ssize_t m = len(masks), i, j
    cdef uint64_t *buf = _load(masks, m)
    cdef long *h = <long *>malloc((m if m > 0 else 1) * sizeof(long))
    cdef long best
    try:
        for i in range(m - 1, -1, -1):
            best = 0
            for j in range(i + 1, m):
                if buf[i] & buf[j] == buf[i] and h[j] + 1 > best:
                    best = h[j] + 1
            h[i] = best
        return [h[i] for i in range(m)]
    finally:
        free(buf)
        free(h)


cdef bint _closed(uint64_t fam) noexcept nogil:
    cdef int sets[64]
    cdef int ns = 0, s = 0, i, j
    cdef uint64_t f = fam
    while f:
        if f & 1:
            sets[ns] = s
            ns += 1
        f >>= 1
        s += 1
    for i in range(ns):
        for j in range(i + 1, ns):
            if not (fam >> (sets[i] | sets[j])) & 1:
                return False
    return True


def family_is_union_closed(fam):
    return bool(_closed(<uint64_t>fam))


def sweep_union_closed(int n, lo, hi):
    if n < 0 or n > 5:
        raise ValueError("sweep supports 0 <= n <= 5")
    cdef uint64_t f = <uint64_t>lo, end = <uint64_t>hi
    out = []
    while f < end:
        if _closed(f):
            out.append(f)
        f += 1
    return out


def family_closure(fam):
    cdef uint64_t cur = <uint64_t>fam, grown
    cdef int sets[64]
    cdef int ns, s, i, j
    cdef uint64_t f
    while True:
        ns = 0
        s = 0
        f = cur
        while f:
            if f & 1:
                sets[ns] = s
                ns += 1
            f >>= 1
            s += 1
        grown = cur
        for i in range(ns):
            for j in range(i + 1, ns):
                grown |= (<uint64_t>1) << (sets[i] | sets[j])
        if grown == cur:
            return cur
        cur = grown
