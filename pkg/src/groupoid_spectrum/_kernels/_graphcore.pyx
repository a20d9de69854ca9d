# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled graph kernels: bitset reachability and simple cycle enumeration.

Mirror of ``_graphcore_py``; output must be identical.  Limited to 64
vertices (one machine word per vertex row); the dispatching wrapper falls
back to the pure backend above that.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport free, malloc

BACKEND = "cython"


def reach_masks(int n, arcs):
    """Reflexive-transitive closure as bitmasks (see pure twin)."""
    if n > 64:
        raise ValueError("compiled backend supports at most 64 vertices")
    cdef uint64_t reach[64]
    cdef int v, k, s, d
    cdef uint64_t bit, row
    for v in range(n):
        reach[v] = 0
    for s, d in arcs:
        reach[s] |= (<uint64_t>1) << d
    for k in range(n):
        bit = (<uint64_t>1) << k
        row = reach[k]
        for v in range(n):
            if reach[v] & bit:
                reach[v] |= row
    out = []
    for v in range(n):
        reach[v] |= (<uint64_t>1) << v
        out.append(int(reach[v]))
    return out


def simple_cycles(int n, arcs):
    """All simple cycles as arc-index tuples (see pure twin for the contract)."""
    if n > 64:
        raise ValueError("compiled backend supports at most 64 vertices")
    cdef int m = len(arcs)
    cdef int mcap = m if m > 0 else 1
    cdef int *src = <int *>malloc(mcap * sizeof(int))
    cdef int *dst = <int *>malloc(mcap * sizeof(int))
    # CSR adjacency by source, arcs kept in index order
    cdef int *head = <int *>malloc((n + 1) * sizeof(int))
    cdef int *adj = <int *>malloc(mcap * sizeof(int))
    cdef int *fill = <int *>malloc((n if n > 0 else 1) * sizeof(int))
    # DFS state: one frame per on-path vertex, at most n + 1 deep
    cdef int *frame_v = <int *>malloc((n + 1) * sizeof(int))
    cdef int *frame_pos = <int *>malloc((n + 1) * sizeof(int))
    cdef int *path = <int *>malloc((n + 1) * sizeof(int))
    cdef int i, j, v, w, v0, top, npath, pos
    cdef uint64_t onpath
    cycles = []
    if (src == NULL or dst == NULL or head == NULL or adj == NULL
            or fill == NULL or frame_v == NULL or frame_pos == NULL or path == NULL):
        free(src); free(dst); free(head); free(adj); free(fill)
        free(frame_v); free(frame_pos); free(path)
        raise MemoryError()
    try:
        for i, (v, w) in enumerate(arcs):
            src[i] = v
            dst[i] = w
        for v in range(n + 1):
            head[v] = 0
        for i in range(m):
            head[src[i] + 1] += 1
        for v in range(n):
            head[v + 1] += head[v]
        for v in range(n):
            fill[v] = head[v]
        for i in range(m):
            adj[fill[src[i]]] = i
            fill[src[i]] += 1

        for v0 in range(n):
            npath = 0
            onpath = (<uint64_t>1) << v0
            frame_v[0] = v0
            frame_pos[0] = head[v0]
            top = 0
            while top >= 0:
                v = frame_v[top]
                pos = frame_pos[top]
                if pos < head[v + 1]:
                    frame_pos[top] = pos + 1
                    j = adj[pos]
                    w = dst[j]
                    if w == v0:
                        cyc = []
                        for i in range(npath):
                            cyc.append(path[i])
                        cyc.append(j)
                        cycles.append(tuple(cyc))
                    elif w > v0 and not (onpath >> w) & 1:
                        path[npath] = j
                        npath += 1
                        onpath |= (<uint64_t>1) << w
                        top += 1
                        frame_v[top] = w
                        frame_pos[top] = head[w]
                else:
                    top -= 1
                    if npath > 0:
                        npath -= 1
                        onpath &= ~((<uint64_t>1) << dst[path[npath]])
    finally:
        free(src); free(dst); free(head); free(adj); free(fill)
        free(frame_v); free(frame_pos); free(path)
    return cycles
