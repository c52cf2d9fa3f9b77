# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled Cayley-table kernels; see ``_pykernels`` for the reference versions."""

from cpython.mem cimport PyMem_Malloc, PyMem_Free
from libc.string cimport memset


def closure(const int[:] mul, int n, gens):
    cdef int ng = 0
    cdef int i, j, a, c, head, tail
    cdef list glist = [g for g in gens if g != 0]
    ng = len(glist)
    cdef int *gs = <int *> PyMem_Malloc((ng + 1) * sizeof(int))
    cdef int *queue = <int *> PyMem_Malloc(n * sizeof(int))
    cdef unsigned char *seen = <unsigned char *> PyMem_Malloc(n)
    if gs == NULL or queue == NULL or seen == NULL:
        raise MemoryError()
    memset(seen, 0, n)
    try:
        for i in range(ng):
            gs[i] = glist[i]
        seen[0] = 1
        queue[0] = 0
        head = 0
        tail = 1
        while head < tail:
            a = queue[head]
            head += 1
            for j in range(ng):
                c = mul[a * n + gs[j]]
                if not seen[c]:
                    seen[c] = 1
                    queue[tail] = c
                    tail += 1
        return [i for i in range(n) if seen[i]]
    finally:
        PyMem_Free(gs)
        PyMem_Free(queue)
        PyMem_Free(seen)


def conjugate(const int[:] mul, const int[:] inv, int n, elems, int g):
    cdef int gi = inv[g]
    cdef int h
    cdef list out = []
    for h in elems:
        out.append(mul[mul[gi * n + h] * n + g])
    out.sort()
    return out


def count_conjugators(const int[:] mul, const int[:] inv, int n, small, big_flags):
    cdef int ns = len(small)
    cdef int *hs = <int *> PyMem_Malloc((ns + 1) * sizeof(int))
    cdef unsigned char *flags = <unsigned char *> PyMem_Malloc(n)
    cdef int g, gi, k, count = 0
    cdef bint ok
    if hs == NULL or flags == NULL:
        raise MemoryError()
    try:
        for k in range(ns):
            hs[k] = small[k]
        for k in range(n):
            flags[k] = 1 if big_flags[k] else 0
        for g in range(n):
            gi = inv[g]
            ok = True
            for k in range(ns):
                if not flags[mul[mul[g * n + hs[k]] * n + gi]]:
                    ok = False
                    break
            if ok:
                count += 1
        return count
    finally:
        PyMem_Free(hs)
        PyMem_Free(flags)


def fixed_points(const int[:] act, int npts, elems):
    cdef int ne = len(elems)
    cdef int *hs = <int *> PyMem_Malloc((ne + 1) * sizeof(int))
    cdef int x, k
    cdef bint ok
    cdef list out = []
    if hs == NULL:
        raise MemoryError()
    try:
        for k in range(ne):
            hs[k] = elems[k]
        for x in range(npts):
            ok = True
            for k in range(ne):
                if act[hs[k] * npts + x] != x:
                    ok = False
                    break
            if ok:
                out.append(x)
        return out
    finally:
        PyMem_Free(hs)


def orbit_labels(const int[:] act, int npts, gens):
    cdef int ng = len(gens)
    cdef int *gs = <int *> PyMem_Malloc((ng + 1) * sizeof(int))
    cdef int *stack = <int *> PyMem_Malloc((npts + 1) * sizeof(int))
    cdef int x, y, z, k, top
    if gs == NULL or stack == NULL:
        raise MemoryError()
    label = [-1] * npts
    cdef list lab = label
    try:
        for k in range(ng):
            gs[k] = gens[k]
        for x in range(npts):
            if lab[x] != -1:
                continue
            lab[x] = x
            stack[0] = x
            top = 1
            while top > 0:
                top -= 1
                y = stack[top]
                for k in range(ng):
                    z = act[gs[k] * npts + y]
                    if lab[z] == -1:
                        lab[z] = x
                        stack[top] = z
                        top += 1
        return lab
    finally:
        PyMem_Free(gs)
        PyMem_Free(stack)
