"""Circulant digraphs and their exact minimal-routing tables.

A network C_n(s_1, ..., s_r) has vertices Z_n and an arc i -> i + s_l
for every step. A routing to vertex i is a vector a in N^r with
sum(a_l * s_l) = i mod n; its length is the coordinate sum.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import _paths_py
from .errors import (
    ArityMismatchError,
    DisconnectedError,
    DuplicateStepError,
    ZeroStepError,
)

try:
    from . import _paths_c
except ImportError:  # extension not built; the pure twin covers everything
    _paths_c = None

PathVector = tuple[int, ...]


@dataclass(frozen=True)
class CirculantNetwork:
    """A circulant digraph, steps stored reduced mod n in input order."""

    n: int
    steps: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return f"C{self.n}({','.join(map(str, self.steps))})"


@dataclass(frozen=True)
class DistanceTable:
    """Distances from vertex 0 and every minimal routing vector per vertex."""

    net: CirculantNetwork
    dist: tuple[int, ...]
    minimal_paths: tuple[tuple[PathVector, ...], ...]


def build_network(n: int, steps) -> CirculantNetwork:
    """Validate (n, steps) and return the normalized network.

    Steps are reduced mod n and must be nonzero, pairwise distinct and
    jointly coprime with n (strong connectivity).
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"network size must be a positive integer, got {n!r}")
    steps = [int(s) for s in steps]
    if not steps:
        raise ValueError("at least one step is required")
    reduced = tuple(s % n for s in steps)
    for pos, (orig, red) in enumerate(zip(steps, reduced)):
        if red == 0:
            raise ZeroStepError(
                f"step {orig} is 0 mod {n}", step=orig, position=pos, n=n
            )
    seen: dict[int, int] = {}
    for pos, red in enumerate(reduced):
        if red in seen:
            raise DuplicateStepError(
                f"steps at positions {seen[red]} and {pos} are equal mod {n}",
                positions=[seen[red], pos],
                step=red,
                n=n,
            )
        seen[red] = pos
    if math.gcd(n, *reduced) != 1:
        raise DisconnectedError(
            f"gcd of steps and {n} is {math.gcd(n, *reduced)}; network is disconnected",
            gcd=math.gcd(n, *reduced),
            n=n,
        )
    return CirculantNetwork(n, reduced)


def vertex_of(net: CirculantNetwork, a) -> int:
    """The vertex reached from 0 by the routing vector a."""
    if len(a) != net.r:
        raise ArityMismatchError(
            f"vector has {len(a)} coordinates, network has {net.r} steps",
            expected=net.r,
            got=len(a),
        )
    return sum(c * s for c, s in zip(a, net.steps)) % net.n


def _use_compiled(n: int, r: int) -> bool:
    if _paths_c is None:
        return False
    if os.environ.get("CIRCMDD_PURE_PYTHON"):
        return False
    return n < _paths_c.MAX_N and r <= _paths_c.MAX_R


def active_kernel(net: CirculantNetwork) -> str:
    """Which minimal-path kernel distance_table would use for this network."""
    return "compiled" if _use_compiled(net.n, net.r) else "pure-python"


@lru_cache(maxsize=64)
def distance_table(net: CirculantNetwork) -> DistanceTable:
    """All distances and all minimal routing vectors of the network.

    Level expansion (see the kernel twins): P_i holds every vector of
    norm dist[i] reaching i, sorted lexicographically. Cached per
    network; the table is immutable and safe to share.
    """
    if _use_compiled(net.n, net.r):
        dist, paths = _paths_c.minimal_path_table(net.n, net.steps)
    else:
        dist, paths = _paths_py.minimal_path_table(net.n, net.steps)
    return DistanceTable(
        net, tuple(dist), tuple(tuple(vecs) for vecs in paths)
    )


def network_stats(net: CirculantNetwork) -> tuple[int, Fraction]:
    """Diameter and exact average distance from vertex 0."""
    table = distance_table(net)
    return max(table.dist), Fraction(sum(table.dist), net.n)
