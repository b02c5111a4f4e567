# cython: language_level=3
# cython: boundscheck=False, wraparound=False
"""Compiled composition kernels; see blockperm._glue_py for the contract."""

from libc.stdlib cimport free, malloc


cdef inline int _find(int* parent, int a) noexcept nogil:
    while parent[a] != a:
        parent[a] = parent[parent[a]]
        a = parent[a]
    return a


def canonical_labels(top, bot):
    """Relabel both rows by first appearance of each id along the top row."""
    cdef Py_ssize_t n = len(top)
    cdef Py_ssize_t m = len(bot)
    if n == 0 and m == 0:
        return (), ()
    cdef int k = 0
    cdef Py_ssize_t i
    cdef int v
    for i in range(n):
        v = top[i]
        if v + 1 > k:
            k = v + 1
    cdef int* newid = <int*> malloc(k * sizeof(int))
    if newid == NULL:
        raise MemoryError()
    cdef list out_top = [0] * n
    cdef list out_bot = [0] * m
    cdef int count = 0
    try:
        for i in range(k):
            newid[i] = -1
        for i in range(n):
            v = top[i]
            if newid[v] < 0:
                newid[v] = count
                count += 1
            out_top[i] = newid[v]
        for i in range(m):
            v = bot[i]
            if v >= k or newid[v] < 0:
                raise ValueError("component with no top vertex")
            out_bot[i] = newid[v]
    finally:
        free(newid)
    return tuple(out_top), tuple(out_bot)


def glue_labels(ftop, fbot, gtop, gbot):
    """Compose two diagrams by gluing the bottom row of f to the top row of g."""
    cdef Py_ssize_t n = len(ftop)
    if n == 0:
        return (), ()
    cdef int kf = 0, kg = 0
    cdef Py_ssize_t i
    cdef int v, ra, rb
    for i in range(n):
        v = ftop[i]
        if v + 1 > kf:
            kf = v + 1
        v = gtop[i]
        if v + 1 > kg:
            kg = v + 1
    cdef int total = kf + kg
    cdef int* parent = <int*> malloc(total * sizeof(int))
    cdef int* newid = <int*> malloc(total * sizeof(int))
    if parent == NULL or newid == NULL:
        if parent != NULL:
            free(parent)
        if newid != NULL:
            free(newid)
        raise MemoryError()
    cdef list out_top = [0] * n
    cdef list out_bot = [0] * n
    cdef int count = 0
    try:
        for i in range(total):
            parent[i] = i
            newid[i] = -1
        for i in range(n):
            ra = _find(parent, <int> fbot[i])
            rb = _find(parent, kf + <int> gtop[i])
            if ra != rb:
                parent[rb] = ra
        for i in range(n):
            ra = _find(parent, <int> ftop[i])
            if newid[ra] < 0:
                newid[ra] = count
                count += 1
            out_top[i] = newid[ra]
        for i in range(n):
            ra = _find(parent, kf + <int> gbot[i])
            if newid[ra] < 0:
                raise ValueError("component with no top vertex")
            out_bot[i] = newid[ra]
    finally:
        free(parent)
        free(newid)
    return tuple(out_top), tuple(out_bot)
