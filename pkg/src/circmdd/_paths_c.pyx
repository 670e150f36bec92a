# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled minimal-path kernel.

Path vectors are packed into 64-bit codes, 16 bits per coordinate with
the first coordinate in the highest bits, so unsigned integer order
equals lexicographic order. Coordinates are bounded by the diameter,
hence by n, so the packing is exact for n < 2**15 and up to 4 steps.
Callers outside those bounds must use the pure-Python twin in
``_paths_py`` (arbitrary precision); both return identical output.
"""

from cython.operator cimport dereference as deref, preincrement as inc
from libc.stdint cimport uint64_t
from libcpp.algorithm cimport sort
from libcpp.unordered_set cimport unordered_set
from libcpp.vector cimport vector

MAX_N = 1 << 15
MAX_R = 4


def minimal_path_table(n, steps):
    """Distances from vertex 0 plus all minimal routing vectors per vertex."""
    cdef int cn = int(n)
    steps = list(steps)
    cdef int r = len(steps)
    if cn < 1 or cn >= (1 << 15) or r < 1 or r > 4:
        raise OverflowError("network outside compiled kernel bounds")
    cdef int[4] cs
    cdef int[4] shift
    cdef int l
    for l in range(r):
        cs[l] = steps[l] % cn
        shift[l] = 16 * (r - 1 - l)

    cdef vector[int] dist = vector[int](cn, -1)
    cdef vector[vector[uint64_t]] codes = vector[vector[uint64_t]](cn)
    cdef vector[unordered_set[uint64_t]] pending = vector[unordered_set[uint64_t]](cn)
    cdef vector[int] frontier
    cdef vector[int] touched

    dist[0] = 0
    codes[0].push_back(0)
    frontier.push_back(0)

    cdef int done = 1, d = 0, v, u, i
    cdef size_t j
    cdef unordered_set[uint64_t].iterator it
    while done < cn:
        touched.clear()
        for i in range(<int>frontier.size()):
            v = frontier[i]
            for l in range(r):
                u = v + cs[l]
                if u >= cn:
                    u -= cn
                if dist[u] != -1 and dist[u] != d + 1:
                    continue
                if dist[u] == -1:
                    dist[u] = d + 1
                    done += 1
                    touched.push_back(u)
                for j in range(codes[v].size()):
                    pending[u].insert(codes[v][j] + ((<uint64_t>1) << shift[l]))
        for i in range(<int>touched.size()):
            u = touched[i]
            it = pending[u].begin()
            while it != pending[u].end():
                codes[u].push_back(deref(it))
                inc(it)
            pending[u].clear()
            sort(codes[u].begin(), codes[u].end())
        frontier = touched
        d += 1
        if d > cn:
            raise RuntimeError("level expansion failed to converge")

    out_dist = [dist[i] for i in range(cn)]
    out_paths = []
    cdef uint64_t code
    for v in range(cn):
        vecs = []
        for j in range(codes[v].size()):
            code = codes[v][j]
            vecs.append(tuple([(code >> shift[l]) & 0xFFFF for l in range(r)]))
        out_paths.append(vecs)
    return out_dist, out_paths
