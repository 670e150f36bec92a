"""Pure-Python minimal-path kernel.

Level expansion over the digraph: level d+1 is built by extending every
minimal vector at level d by one arc of each step and dropping vectors
that land on a vertex already finished at an earlier level. Produces,
for every vertex, the complete set of minimal routing vectors.

This is the fallback twin of the compiled kernel in ``_paths_c``; both
must return identical output (see tests and benchmarks).
"""

from __future__ import annotations


def minimal_path_table(n: int, steps) -> tuple[list[int], list[list[tuple[int, ...]]]]:
    """Distances from vertex 0 plus all minimal routing vectors per vertex.

    Returns (dist, paths) where paths[i] is the lexicographically sorted
    list of all vectors a with sum(a) == dist[i] reaching vertex i.
    Assumes a valid network (connected, so the expansion terminates).
    """
    r = len(steps)
    steps = [s % n for s in steps]
    dist = [-1] * n
    paths: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
    dist[0] = 0
    paths[0] = [(0,) * r]
    frontier = {0: paths[0]}
    done = 1
    d = 0
    while done < n:
        pending: dict[int, set[tuple[int, ...]]] = {}
        for v, vecs in frontier.items():
            for l, s in enumerate(steps):
                u = v + s
                if u >= n:
                    u -= n
                du = dist[u]
                if du != -1 and du != d + 1:
                    continue
                if du == -1:
                    dist[u] = d + 1
                    done += 1
                bucket = pending.get(u)
                if bucket is None:
                    bucket = set()
                    pending[u] = bucket
                for a in vecs:
                    bucket.add(a[:l] + (a[l] + 1,) + a[l + 1:])
        frontier = {}
        for u, bucket in pending.items():
            vecs = sorted(bucket)
            paths[u] = vecs
            frontier[u] = vecs
        d += 1
        if d > n:
            raise RuntimeError("level expansion failed to converge")
    return dist, paths
