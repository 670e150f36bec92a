"""Homogeneous lattices of circulant networks and their octant cones.

The homogeneous lattice of C_n(s) is the set of integer vectors that
sum to zero and satisfy sum(a_l * s_l) = 0 mod n. Its intersections
with sign orthants are finitely generated semigroups; for three steps
each such cone is two-dimensional and its unique minimal generating set
(Hilbert basis) is computed exactly here.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import ArityMismatchError, UnsupportedArityError
from .intlin import dot, hnf_rows, kernel_of_row, norm1, vec_neg
from .network import CirculantNetwork

SINGLE_NEGATIVE_SIGNS = ((-1, 1, 1), (1, -1, 1), (1, 1, -1))


@dataclass(frozen=True)
class HomogeneousLattice:
    """Sum-zero sublattice of the routing relations, canonical basis."""

    net: CirculantNetwork
    basis: tuple[tuple[int, ...], ...]

    @property
    def r(self) -> int:
        return self.net.r

    @property
    def index(self) -> int:
        """Index in the full sum-zero lattice of Z^r."""
        n = self.net.n
        s = self.net.steps
        g = n
        for i in range(self.r - 1):
            g = gcd(g, s[i] - s[-1])
        return n // g

    def contains(self, a) -> bool:
        """Membership test: coordinate sum zero and relation 0 mod n."""
        if len(a) != self.r:
            raise ArityMismatchError(
                f"vector has {len(a)} coordinates, lattice lives in Z^{self.r}",
                expected=self.r,
                got=len(a),
            )
        if sum(a) != 0:
            return False
        return dot(a, self.net.steps) % self.net.n == 0


def homogeneous_lattice(net: CirculantNetwork) -> HomogeneousLattice:
    """Compute a canonical basis of the homogeneous lattice.

    Parametrize the sum-zero hyperplane by the first r-1 coordinates;
    the relation becomes a single congruence whose integer kernel is
    read off a unimodular column reduction. The basis is then put in
    Hermite normal form so equal lattices compare equal as data.
    """
    r = net.r
    if r == 1:
        return HomogeneousLattice(net, ())
    row = [net.steps[i] - net.steps[-1] for i in range(r - 1)] + [net.n]
    gens = []
    for col in kernel_of_row(row):
        c = col[: r - 1]
        gens.append(tuple(c) + (-sum(c),))
    return HomogeneousLattice(net, hnf_rows(gens, r))


@dataclass(frozen=True)
class OctantSemigroup:
    """Lattice points of one sign orthant (zeros allowed everywhere)."""

    lattice: HomogeneousLattice
    signs: tuple[int, ...]

    def __post_init__(self):
        if len(self.signs) != self.lattice.r:
            raise ArityMismatchError(
                "sign pattern length does not match the lattice dimension",
                expected=self.lattice.r,
                got=len(self.signs),
            )
        if any(s not in (-1, 1) for s in self.signs):
            raise ValueError(f"signs must be +1 or -1, got {self.signs!r}")


def octant(lat: HomogeneousLattice, signs) -> OctantSemigroup:
    """Build an octant from a sign tuple or a string like '-++'."""
    if isinstance(signs, str):
        signs = tuple(-1 if ch == "-" else 1 for ch in signs)
    return OctantSemigroup(lat, tuple(signs))


def signs_str(signs) -> str:
    return "".join("-" if s < 0 else "+" for s in signs)


def octant_points_bounded(oct: OctantSemigroup, bound: int) -> list[tuple[int, ...]]:
    """All nonzero octant points of 1-norm at most ``bound``, sorted.

    Exhaustive scan: magnitudes of all but the last coordinate are free,
    the last is forced by the zero-sum condition and checked against the
    sign pattern and the congruence.
    """
    lat = oct.lattice
    net = lat.net
    r = lat.r
    eps = oct.signs
    steps = net.steps
    n = net.n
    out: list[tuple[int, ...]] = []

    def scan(idx: int, remaining: int, acc: tuple[int, ...], acc_sum: int):
        if idx == r - 1:
            last = -acc_sum
            if last * eps[-1] < 0 or abs(last) > remaining:
                return
            a = acc + (last,)
            if any(a) and dot(a, steps) % n == 0:
                out.append(a)
            return
        for m in range(remaining + 1):
            val = eps[idx] * m
            scan(idx + 1, remaining - m, acc + (val,), acc_sum + val)

    if bound >= 0:
        scan(0, bound, (), 0)
    return sorted(out)


@dataclass(frozen=True)
class HilbertBasis:
    """Unique minimal generating set of an octant semigroup."""

    octant: OctantSemigroup
    elements: tuple[tuple[int, ...], ...]


def boundary_ray_minima(oct: OctantSemigroup) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Smallest nonzero lattice points on the two boundary rays (3 steps).

    For a single-negative pattern the cone in the sum-zero plane is
    spanned by the two directions moving weight from the negative
    coordinate to one positive coordinate; the minimal multiple on each
    ray comes from a gcd with n.
    """
    lat = oct.lattice
    if lat.r != 3:
        raise UnsupportedArityError(
            "boundary rays are only defined for three steps", r=lat.r
        )
    negs = [i for i, s in enumerate(oct.signs) if s < 0]
    if len(negs) == 2:
        u, v = boundary_ray_minima(octant(lat, vec_neg(oct.signs)))
        return vec_neg(u), vec_neg(v)
    if len(negs) != 1:
        raise ValueError("cone is trivial for uniform sign patterns")
    j = negs[0]
    p1, p2 = [i for i in range(3) if i != j]
    n = lat.net.n
    s = lat.net.steps
    mins = []
    for p in (p1, p2):
        c = n // gcd(n, (s[p] - s[j]) % n)
        vec = [0, 0, 0]
        vec[p] = c
        vec[j] = -c
        mins.append(tuple(vec))
    return mins[0], mins[1]


def hilbert_basis(oct: OctantSemigroup) -> HilbertBasis:
    """Hilbert basis of an octant semigroup for a three-step network.

    Every semigroup element is a nonnegative real combination of the two
    boundary minima u and v, and subtracting integral multiples of u, v
    stays inside the cone, so all indecomposable elements live in the
    parallelepiped {y*u + x*v : 0 <= y, x <= 1}. In the coordinates of
    the two positive entries that region is just a box, which is scanned
    exhaustively; indecomposability is then a set lookup because both
    parts of any splitting also lie in the box.
    """
    lat = oct.lattice
    if lat.r != 3:
        raise UnsupportedArityError(
            "Hilbert bases are only computed for three steps", r=lat.r
        )
    negs = [i for i, s in enumerate(oct.signs) if s < 0]
    if len(negs) in (0, 3):
        return HilbertBasis(oct, ())
    if len(negs) == 2:
        inner = hilbert_basis(octant(lat, vec_neg(oct.signs)))
        return HilbertBasis(oct, tuple(sorted(vec_neg(a) for a in inner.elements)))
    j = negs[0]
    p1, p2 = [i for i in range(3) if i != j]
    n = lat.net.n
    s = lat.net.steps
    c1 = n // gcd(n, (s[p1] - s[j]) % n)
    c2 = n // gcd(n, (s[p2] - s[j]) % n)
    points = set()
    for y in range(c1 + 1):
        for z in range(c2 + 1):
            if y == 0 and z == 0:
                continue
            a = [0, 0, 0]
            a[p1] = y
            a[p2] = z
            a[j] = -(y + z)
            a = tuple(a)
            if dot(a, s) % n == 0:
                points.add(a)
    elements = []
    for a in points:
        decomposable = False
        for b in points:
            if b != a:
                rest = tuple(x - y for x, y in zip(a, b))
                if rest in points:
                    decomposable = True
                    break
        if not decomposable:
            elements.append(a)
    return HilbertBasis(oct, tuple(sorted(elements)))
