"""Fans of coherent diagrams for three-step networks.

Weight vectors matter only up to positive scale and shifts along
(1, 1, 1), so weights live in the sum-zero plane. Weights producing the
same diagram form open convex cones whose boundary rays are orthogonal
to Hilbert generators of the octant semigroups; candidate rays are
generated from those Hilbert bases, verified against the network, and
the open sectors between verified rays are sampled to collect the
distinct coherent diagrams. Also provides the size lift that preserves
the homogeneous lattice and the geometric-step families with many
diagrams.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from math import gcd

from .errors import (
    BadFamilyParamsError,
    BadLiftParamsError,
    InternalInconsistencyError,
    UnsupportedArityError,
    WeightTieError,
)
from .intlin import dot, norm1, primitive, vec_neg, vec_scale
from .lattice import (
    HomogeneousLattice,
    OctantSemigroup,
    SINGLE_NEGATIVE_SIGNS,
    hilbert_basis,
    homogeneous_lattice,
    octant_points_bounded,
)
from .mdd import Mdd, build_coherent_mdd
from .network import CirculantNetwork, build_network, distance_table, vertex_of


@dataclass(frozen=True)
class RayCandidate:
    """A primitive sum-zero ray together with the Hilbert generators
    orthogonal to it that survived the one-sided octant screening."""

    ray: tuple[int, int, int]
    sources: tuple[tuple[int, int, int], ...]


@dataclass(frozen=True)
class Wall:
    """A verified boundary ray between two adjacent diagram cones."""

    ray: tuple[int, int, int]
    witness: tuple[int, int, int]


@dataclass(frozen=True)
class WallRejection:
    ray: tuple[int, int, int]
    failed_condition: int
    reason: str


@dataclass(frozen=True)
class FanSummary:
    net: CirculantNetwork
    walls: tuple[Wall, ...]
    sector_representatives: tuple[tuple[int, int, int], ...]
    mdd_count: int


@dataclass(frozen=True)
class FanReport:
    net: CirculantNetwork
    candidates: tuple[RayCandidate, ...]
    walls: tuple[Wall, ...]
    rejections: tuple[WallRejection, ...]
    summary: FanSummary


def _orth_in_plane(a) -> tuple[int, int, int]:
    """A sum-zero vector orthogonal to a (nonzero whenever a is)."""
    return (a[1] - a[2], a[2] - a[0], a[0] - a[1])


def _plane_coords(w) -> tuple[int, int]:
    """Coordinates of a sum-zero vector in the basis (1,-1,0), (0,1,-1)."""
    return (w[0], -w[2])


def _plane_vector(p) -> tuple[int, int, int]:
    x, y = p
    return (x, y - x, -y)


def _half(p) -> int:
    return 0 if (p[1] > 0 or (p[1] == 0 and p[0] > 0)) else 1


def _cross(p, q) -> int:
    return p[0] * q[1] - p[1] * q[0]


def _angular_cmp_rays(wa, wb) -> int:
    pa, pb = _plane_coords(wa), _plane_coords(wb)
    ha, hb = _half(pa), _half(pb)
    if ha != hb:
        return -1 if ha < hb else 1
    cr = _cross(pa, pb)
    if cr > 0:
        return -1
    if cr < 0:
        return 1
    return 0


_RAY_KEY = functools.cmp_to_key(_angular_cmp_rays)


def candidate_rays(lat: HomogeneousLattice) -> tuple[RayCandidate, ...]:
    """All rays that can separate two diagram cones of this lattice.

    Each Hilbert generator a of a single-negative octant is orthogonal
    to two opposite rays; a ray survives only if every octant point of
    norm at most ||a|| has nonnegative product with it (the one-sided
    screening that a separating ray must satisfy). Survivors are
    deduplicated and sorted by angle.
    """
    if lat.r != 3:
        raise UnsupportedArityError("fans are computed for three steps", r=lat.r)
    found: dict[tuple[int, int, int], set] = {}
    for signs in SINGLE_NEGATIVE_SIGNS:
        oct = OctantSemigroup(lat, signs)
        elements = hilbert_basis(oct).elements
        if not elements:
            continue
        pts = octant_points_bounded(oct, max(norm1(a) for a in elements))
        for a in elements:
            nearby = [b for b in pts if norm1(b) <= norm1(a)]
            base = primitive(_orth_in_plane(a))
            for ray in (base, vec_neg(base)):
                if all(dot(ray, b) >= 0 for b in nearby):
                    found.setdefault(ray, set()).add(a)
    cands = [
        RayCandidate(ray, tuple(sorted(sources)))
        for ray, sources in found.items()
    ]
    cands.sort(key=lambda c: _RAY_KEY(c.ray))
    return tuple(cands)


def _check_wall_conditions(net, lat, table, ray, a):
    """None if a certifies the ray as a wall, else (condition, reason)."""
    plus = tuple(max(c, 0) for c in a)
    minus = tuple(max(-c, 0) for c in a)
    v = vertex_of(net, plus)
    if vertex_of(net, minus) != v:
        raise InternalInconsistencyError(
            "positive and negative parts reach different vertices",
            vector=list(a),
        )
    half_len = sum(plus)
    if table.dist[v] != half_len:
        return (
            1,
            f"part {plus} reaches vertex {v} in {half_len} arcs but the "
            f"distance is {table.dist[v]}",
        )
    signs = tuple(-1 if c < 0 else 1 for c in a)
    oct = OctantSemigroup(lat, signs)
    if a not in hilbert_basis(oct).elements:
        return (2, f"{a} is not a Hilbert generator of its octant")
    for b in octant_points_bounded(oct, norm1(a)):
        if dot(ray, b) < 0:
            return (
                3,
                f"octant point {b} lies strictly on the negative side of the ray",
            )
    return None


def verify_wall(net: CirculantNetwork, cand: RayCandidate):
    """Check a candidate ray against the network; Wall or WallRejection.

    The smallest nonzero lattice vector on the line orthogonal to the
    ray (found by scanning multiples of the primitive direction, bounded
    by the lattice index) is oriented to have a single negative entry
    and must: route minimally on both sides, be a Hilbert generator of
    its octant, and have no short octant point strictly on the negative
    side of the ray.
    """
    lat = homogeneous_lattice(net)
    if lat.r != 3:
        raise UnsupportedArityError("fans are computed for three steps", r=lat.r)
    ray = cand.ray
    direction = primitive(_orth_in_plane(ray))
    base = None
    for m in range(1, lat.index + 1):
        scaled = vec_scale(direction, m)
        if lat.contains(scaled):
            base = scaled
            break
    if base is None:
        return WallRejection(ray, 0, "no lattice point on the orthogonal line")
    table = distance_table(net)
    attempts = []
    for a in (base, vec_neg(base)):
        if sum(1 for c in a if c < 0) != 1:
            continue
        failure = _check_wall_conditions(net, lat, table, ray, a)
        if failure is None:
            return Wall(ray=ray, witness=a)
        attempts.append(failure)
    condition, reason = max(attempts, key=lambda t: t[0])
    return WallRejection(ray=ray, failed_condition=condition, reason=reason)


def _sample_sectors(net, walls):
    """One generic weight per open sector and the diagram it builds."""
    if not walls:
        rep = (1, 0, -1)
        try:
            mdd = build_coherent_mdd(net, rep, tie_policy="error")
        except WeightTieError as exc:
            raise InternalInconsistencyError(
                "no verified walls but the network still admits weight ties",
                detail=str(exc),
            ) from exc
        return [rep], [mdd]
    if len(walls) == 1:
        raise InternalInconsistencyError(
            "a complete fan cannot have exactly one boundary ray"
        )
    reps = []
    mdds = []
    m = len(walls)
    for i in range(m):
        a2 = _plane_coords(walls[i].ray)
        b2 = _plane_coords(walls[(i + 1) % m].ray)
        cr = _cross(a2, b2)
        if cr > 0:
            rep = (a2[0] + b2[0], a2[1] + b2[1])
        elif cr == 0 and (a2[0] * b2[0] + a2[1] * b2[1]) < 0:
            rep = (-a2[1], a2[0])  # half-plane sector: rotate the start ray
        else:
            raise InternalInconsistencyError(
                "consecutive walls are not in convex position",
                first=list(walls[i].ray),
                second=list(walls[(i + 1) % m].ray),
            )
        step = 1
        for _ in range(64):
            try:
                mdd = build_coherent_mdd(net, _plane_vector(rep), tie_policy="error")
                break
            except WeightTieError:
                # slide toward the opening wall past any interior tie line;
                # doubling reaches any integer threshold quickly
                rep = (rep[0] + step * a2[0], rep[1] + step * a2[1])
                step *= 2
        else:
            raise InternalInconsistencyError(
                "sector sampling found no generic weight", sector=i
            )
        reps.append(_plane_vector(rep))
        mdds.append(mdd)
    return reps, mdds


def fan_report(net: CirculantNetwork) -> FanReport:
    """Candidates, verified walls, rejections, and the sector census.

    The number of distinct diagrams collected from the sectors must
    equal the number of verified walls (one diagram when there are
    none); any discrepancy is raised as an internal inconsistency
    rather than absorbed.
    """
    lat = homogeneous_lattice(net)
    cands = candidate_rays(lat)
    walls: list[Wall] = []
    rejections: list[WallRejection] = []
    for cand in cands:
        result = verify_wall(net, cand)
        if isinstance(result, Wall):
            walls.append(result)
        else:
            rejections.append(result)
    walls.sort(key=lambda w: _RAY_KEY(w.ray))
    reps, mdds = _sample_sectors(net, walls)
    count = len({m.cells for m in mdds})
    expected = len(walls) if walls else 1
    if count != expected:
        raise InternalInconsistencyError(
            f"{len(walls)} verified walls but {count} distinct diagrams",
            walls=len(walls),
            diagrams=count,
        )
    summary = FanSummary(net, tuple(walls), tuple(reps), count)
    return FanReport(net, cands, tuple(walls), tuple(rejections), summary)


def coherent_fan(net: CirculantNetwork) -> FanSummary:
    """Verified walls in circular order plus the coherent diagram count."""
    return fan_report(net).summary


def lift_network(net: CirculantNetwork, k: int, t: int) -> CirculantNetwork:
    """Scale a network to size n*k with steps t + k*s.

    Requires gcd(k, n) = gcd(k, t) = 1. The transformation preserves the
    homogeneous lattice (checked for three steps); for k large enough it
    turns every lattice-level wall into an actual wall of the network.
    """
    if not isinstance(k, int) or not isinstance(t, int) or k < 1:
        raise BadLiftParamsError(f"lift factor must be a positive integer, got {k!r}")
    if gcd(k, net.n) != 1:
        raise BadLiftParamsError(
            f"gcd(k, n) = {gcd(k, net.n)} must be 1", k=k, n=net.n
        )
    if gcd(k, t) != 1:
        raise BadLiftParamsError(f"gcd(k, t) = {gcd(k, t)} must be 1", k=k, t=t)
    lifted = build_network(net.n * k, [t + k * s for s in net.steps])
    if net.r == 3:
        if homogeneous_lattice(lifted).basis != homogeneous_lattice(net).basis:
            raise InternalInconsistencyError(
                "lift changed the homogeneous lattice", k=k, t=t
            )
    return lifted


@dataclass(frozen=True)
class FamilyNetwork:
    """A geometric-step network C_N(1, q, q^2), N = 1 + q + q^2, lifted."""

    q: int
    k: int
    t: int
    base: CirculantNetwork
    lifted: CirculantNetwork
    predicted_hilbert: tuple[tuple[tuple[int, int, int], tuple[tuple[int, int, int], ...]], ...]
    predicted_mdd_count: int
    hypothesis_note: str | None


@dataclass(frozen=True)
class OctantCheck:
    signs: tuple[int, int, int]
    expected: tuple[tuple[int, int, int], ...]
    actual: tuple[tuple[int, int, int], ...]
    match: bool


@dataclass(frozen=True)
class FamilyVerification:
    family: FamilyNetwork
    octant_checks: tuple[OctantCheck, ...]
    fan_mdd_count: int
    fan_match: bool
    brute_force_total_count: int | None
    brute_force_coherent_count: int | None
    brute_force_match: bool | None
    ok: bool


def _rotate(a):
    return (a[2], a[0], a[1])


def build_family(q: int, k: int | None = None, t: int | None = None) -> FamilyNetwork:
    """Construct the q-family network and its predictions.

    Requires q >= 2 with q - 1 not a multiple of three (equivalently
    gcd(q - 1, N) = 1 for N = 1 + q + q^2, which makes the homogeneous
    lattice symmetric under cyclic coordinate shifts). Defaults
    k = N + 1, t = 1; any k > N with gcd(k, N) = gcd(k, t) = 1 works.
    Predicts q + 2 Hilbert generators per single-negative octant and
    3(q + 2) coherent diagrams for the lifted network. Values of q
    divisible by three are accepted but flagged: a stricter reading of
    the family hypothesis excludes them.
    """
    if not isinstance(q, int) or q < 2:
        raise BadFamilyParamsError(f"q must be an integer >= 2, got {q!r}")
    if (q - 1) % 3 == 0:
        raise BadFamilyParamsError(
            f"q - 1 = {q - 1} is a multiple of three; the family construction "
            "degenerates",
            q=q,
        )
    n0 = 1 + q + q * q
    k = n0 + 1 if k is None else k
    t = 1 if t is None else t
    if not isinstance(k, int) or k <= n0:
        raise BadFamilyParamsError(
            f"lift factor k must exceed N = {n0}", q=q, k=k
        )
    if not isinstance(t, int):
        raise BadFamilyParamsError(f"t must be an integer, got {t!r}")
    if gcd(k, n0) != 1:
        raise BadFamilyParamsError(
            f"gcd(k, N) = {gcd(k, n0)} must be 1", k=k, n=n0
        )
    if gcd(k, t) != 1:
        raise BadFamilyParamsError(f"gcd(k, t) = {gcd(k, t)} must be 1", k=k, t=t)
    base = build_network(n0, [1, q, q * q])
    lifted = lift_network(base, k, t)
    first = [(-n0, 0, n0)]
    for i in range(q + 1):
        first.append((-q - 1 - i * q, 1 + i * (q + 1), q - i))
    predictions = []
    block = first
    for signs in SINGLE_NEGATIVE_SIGNS:
        predictions.append((signs, tuple(sorted(block))))
        block = [_rotate(a) for a in block]
    note = None
    if q % 3 == 0:
        note = (
            "q is a multiple of three: accepted under the gcd(q-1, 3) = 1 "
            "hypothesis, excluded under the stricter reading that forbids "
            "q divisible by three"
        )
    return FamilyNetwork(
        q=q,
        k=k,
        t=t,
        base=base,
        lifted=lifted,
        predicted_hilbert=tuple(predictions),
        predicted_mdd_count=3 * (q + 2),
        hypothesis_note=note,
    )


def verify_family(
    q: int,
    k: int | None = None,
    t: int | None = None,
    brute_force_limit: int = 100,
) -> FamilyVerification:
    """Check the family predictions against the actual computations.

    Compares each per-octant Hilbert basis of the base network with the
    closed form, runs the fan on the lifted network against 3(q + 2),
    and for lifted sizes up to brute_force_limit also enumerates all
    diagrams and counts the coherent ones. Mismatches are reported,
    never absorbed.
    """
    from .coherence import is_coherent
    from .mdd import enumerate_mdds

    fam = build_family(q, k, t)
    lat = homogeneous_lattice(fam.base)
    checks = []
    for signs, expected in fam.predicted_hilbert:
        actual = hilbert_basis(OctantSemigroup(lat, signs)).elements
        checks.append(
            OctantCheck(signs, expected, actual, set(expected) == set(actual))
        )
    fan_count = coherent_fan(fam.lifted).mdd_count
    fan_match = fan_count == fam.predicted_mdd_count
    brute_total = None
    brute_coherent = None
    brute_match = None
    if fam.lifted.n <= brute_force_limit:
        result = enumerate_mdds(fam.lifted, "all")
        brute_total = len(result.mdds)
        brute_coherent = sum(1 for m in result.mdds if is_coherent(m).coherent)
        brute_match = brute_coherent == fan_count
    ok = (
        all(c.match for c in checks)
        and fan_match
        and brute_match is not False
    )
    return FamilyVerification(
        family=fam,
        octant_checks=tuple(checks),
        fan_mdd_count=fan_count,
        fan_match=fan_match,
        brute_force_total_count=brute_total,
        brute_force_coherent_count=brute_coherent,
        brute_force_match=brute_match,
        ok=ok,
    )
