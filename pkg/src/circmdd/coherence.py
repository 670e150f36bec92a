"""Exact coherence decisions for diagrams.

A diagram is coherent when some weight vector w satisfies
w . (b - D(i)) > 0 for every vertex i and every alternative minimal
routing b. All difference vectors sum to zero, so after dropping the
direction (1, ..., 1) this is strict feasibility of an open cone
through the origin in r-1 dimensions: a sign check for two steps, an
angular sweep in the plane for three, strict Fourier-Motzkin
elimination for four. Everything is integer or rational arithmetic.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import UnsupportedArityError
from .intlin import dot, primitive, vec_sub
from .mdd import Mdd
from .network import distance_table


@dataclass(frozen=True)
class RoutingConstraint:
    """One forced strict preference: the chosen cell beats an alternative."""

    vertex: int
    chosen: tuple[int, ...]
    alternative: tuple[int, ...]


@dataclass(frozen=True)
class CoherenceResult:
    coherent: bool
    witness: tuple[int, ...] | None
    refutation: tuple[RoutingConstraint, ...] | None


def _reduced_coords(c) -> tuple[int, ...]:
    """Coordinates of a sum-zero vector against the basis e_k - e_{k+1}."""
    return tuple(c[k] - c[k + 1] for k in range(len(c) - 1))


def _weight_from_coords(xs, r: int) -> tuple[int, ...]:
    """Rebuild a sum-zero integer weight from reduced coordinates."""
    w = []
    prev = Fraction(0)
    for k in range(r - 1):
        x = Fraction(xs[k])
        w.append(x - prev)
        prev = x
    w.append(-prev)
    denom = 1
    for x in w:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in w]
    return primitive(ints)


def _solve_1d(cons):
    if all(c[0] > 0 for c in cons):
        return (Fraction(1),)
    if all(c[0] < 0 for c in cons):
        return (Fraction(-1),)
    return None


def _half(p) -> int:
    return 0 if (p[1] > 0 or (p[1] == 0 and p[0] > 0)) else 1


def _cross(p, q) -> int:
    return p[0] * q[1] - p[1] * q[0]


def _solve_sweep2(cons):
    """Strict feasibility of open half-planes through the origin in 2-D.

    Sort the (deduplicated, primitive) constraint normals by angle; the
    feasible directions form an open arc that is nonempty exactly when
    some cyclic gap between consecutive normals exceeds pi. The witness
    is built from exact 90-degree rotations of the arc's end normals.
    """
    normals = sorted(set(cons))
    if len(normals) == 1:
        n0 = normals[0]
        return (Fraction(n0[0]), Fraction(n0[1]))

    def cmp(a, b):
        ha, hb = _half(a), _half(b)
        if ha != hb:
            return -1 if ha < hb else 1
        cr = _cross(a, b)
        if cr > 0:
            return -1
        if cr < 0:
            return 1
        return 0

    normals.sort(key=functools.cmp_to_key(cmp))
    m = len(normals)
    for i in range(m):
        a = normals[i]
        b = normals[(i + 1) % m]
        if _cross(a, b) < 0:
            # ccw gap from a to b exceeds pi, so the normals fit in an
            # open half-plane; the arc of feasible directions runs from
            # a rotated clockwise to b rotated counterclockwise
            e1 = (a[1], -a[0])
            e2 = (-b[1], b[0])
            return (Fraction(e1[0] + e2[0]), Fraction(e1[1] + e2[1]))
    return None


def _solve_fm(cons, d: int):
    """Strict homogeneous feasibility by Fourier-Motzkin elimination.

    Eliminating the last variable combines each pair of opposite-sign
    constraints with positive multipliers, so strictness is preserved;
    the witness is recovered by back substitution with exact rationals.
    """
    if not cons:
        return tuple(Fraction(0) for _ in range(d))
    if d == 1:
        return _solve_1d(cons)
    reduced = set()
    for c in cons:
        if c[d - 1] == 0:
            rest = c[: d - 1]
            if not any(rest):
                return None  # constraint 0 > 0
            reduced.add(primitive(rest))
    for p in cons:
        if p[d - 1] <= 0:
            continue
        for q in cons:
            if q[d - 1] >= 0:
                continue
            comb = tuple(
                (-q[d - 1]) * p[j] + p[d - 1] * q[j] for j in range(d - 1)
            )
            if not any(comb):
                return None  # positive combination collapses to 0 > 0
            reduced.add(primitive(comb))
    sub = _solve_fm(sorted(reduced), d - 1)
    if sub is None:
        return None
    lo = None
    hi = None
    for c in cons:
        cd = c[d - 1]
        if cd == 0:
            continue
        val = sum(Fraction(c[j]) * sub[j] for j in range(d - 1))
        bound = -val / cd
        if cd > 0:
            lo = bound if lo is None else max(lo, bound)
        else:
            hi = bound if hi is None else min(hi, bound)
    if lo is None and hi is None:
        x = Fraction(0)
    elif hi is None:
        x = lo + 1
    elif lo is None:
        x = hi - 1
    else:
        if not lo < hi:
            raise AssertionError("elimination produced an empty back interval")
        x = (lo + hi) / 2
    return tuple(sub) + (x,)


def _feasible(directions, r: int):
    """Witness in reduced coordinates for strict positivity, or None."""
    if not directions:
        return tuple(Fraction(0) for _ in range(max(r - 1, 1)))
    if r == 2:
        return _solve_1d(directions)
    if r == 3:
        return _solve_sweep2(directions)
    return _solve_fm(directions, r - 1)


def is_coherent(mdd: Mdd) -> CoherenceResult:
    """Decide coherence exactly; witness weight or irreducible refutation.

    The witness is returned as a primitive sum-zero integer weight and
    re-checked against every constraint before returning. On failure a
    subset of constraints that is infeasible and loses infeasibility if
    any one is dropped is produced by greedy deletion.
    """
    net = mdd.net
    r = net.r
    if r > 4:
        raise UnsupportedArityError(
            "coherence is decided for at most four steps", r=r
        )
    table = distance_table(net)
    constraints: list[RoutingConstraint] = []
    for i, chosen in enumerate(mdd.cells):
        for alt in table.minimal_paths[i]:
            if alt != chosen:
                constraints.append(RoutingConstraint(i, chosen, alt))
    if not constraints:
        witness = tuple(range(r - 1, -1, -1)) if r >= 2 else (1,)
        return CoherenceResult(True, witness, None)

    by_direction: dict[tuple[int, ...], list[RoutingConstraint]] = {}
    for con in constraints:
        c = vec_sub(con.alternative, con.chosen)
        direction = primitive(_reduced_coords(c))
        by_direction.setdefault(direction, []).append(con)
    directions = sorted(by_direction)

    solution = _feasible(directions, r)
    if solution is not None:
        witness = _weight_from_coords(solution, r)
        for con in constraints:
            if dot(witness, con.alternative) <= dot(witness, con.chosen):
                raise AssertionError(
                    f"witness {witness} fails constraint at vertex {con.vertex}"
                )
        return CoherenceResult(True, witness, None)

    core = list(directions)
    for direction in directions:
        trial = [p for p in core if p != direction]
        if trial and _feasible(trial, r) is None:
            core = trial
    refutation = tuple(
        sorted(
            (min(by_direction[p], key=lambda c: (c.vertex, c.alternative)) for p in core),
            key=lambda c: (c.vertex, c.alternative),
        )
    )
    return CoherenceResult(False, None, refutation)
