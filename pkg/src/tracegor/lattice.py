"""Exact integer vectors, lattice bases and simplicial cones.

Vectors are plain tuples of Python ints.  Python integers never wrap around,
but every public arithmetic helper still enforces a signed 64-bit range so that
runaway inputs fail loudly with :class:`LatticeOverflow` instead of silently
producing enormous coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product
from typing import Iterable, Sequence

from .errors import DegenerateCone, DimensionMismatch, LatticeOverflow, ZeroVector

Vector = tuple[int, ...]

INT_MAX = 2**63 - 1
INT_MIN = -(2**63)


def _checked(x: int) -> int:
    if INT_MIN <= x <= INT_MAX:
        return x
    raise LatticeOverflow(f"integer {x} leaves the signed 64-bit range")


def vec(coords: Iterable[int]) -> Vector:
    """Validate and freeze a coordinate sequence."""
    out = []
    for c in coords:
        if isinstance(c, bool) or not isinstance(c, int):
            raise TypeError(f"lattice coordinates must be integers, got {c!r}")
        out.append(_checked(c))
    return tuple(out)


def _same_dim(v: Sequence[int], w: Sequence[int]) -> None:
    if len(v) != len(w):
        raise DimensionMismatch(f"dimension mismatch: {len(v)} vs {len(w)}")


def add(v: Vector, w: Vector) -> Vector:
    _same_dim(v, w)
    return tuple(_checked(a + b) for a, b in zip(v, w))


def sub(v: Vector, w: Vector) -> Vector:
    _same_dim(v, w)
    return tuple(_checked(a - b) for a, b in zip(v, w))


def scale(c: int, v: Vector) -> Vector:
    return tuple(_checked(c * a) for a in v)


def neg(v: Vector) -> Vector:
    return tuple(_checked(-a) for a in v)


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    _same_dim(u, v)
    return _checked(sum(a * b for a, b in zip(u, v)))


def zero(d: int) -> Vector:
    return (0,) * d


def content(v: Sequence[int]) -> int:
    return math.gcd(*v)


def primitive(v: Vector) -> Vector:
    """Divide ``v`` by the gcd of its coordinates, keeping its direction."""
    g = math.gcd(*v)
    if g == 0:
        raise ZeroVector("the zero vector has no primitive direction")
    return tuple(a // g for a in v)


def det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (fraction-free Bareiss elimination)."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DimensionMismatch("determinant needs a square matrix")
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return _checked(sign * m[n - 1][n - 1])


def adjugate(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Adjugate matrix, so that ``rows @ adj == det(rows) * I``."""
    n = len(rows)
    if n == 1:
        return [[1]]
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [[rows[r][c] for c in range(n) if c != j] for r in range(n) if r != i]
            adj[j][i] = (-1) ** (i + j) * det(minor)
    return adj


def hermite_basis(vectors: Iterable[Sequence[int]], d: int) -> list[Vector]:
    """Row-echelon (Hermite normal form) basis of the group generated by ``vectors``.

    The basis is upper triangular with positive pivots; its length is the rank.
    """
    rows = [list(v) for v in vectors if any(v)]
    for r in rows:
        if len(r) != d:
            raise DimensionMismatch(f"expected vectors of length {d}")
    basis: list[list[int]] = []
    for col in range(d):
        active = [r for r in rows if r[col] != 0]
        rest = [r for r in rows if r[col] == 0]
        while len(active) > 1:
            active.sort(key=lambda r: abs(r[col]))
            pivot = active[0]
            keep = [pivot]
            for r in active[1:]:
                q = r[col] // pivot[col]
                r2 = [a - q * b for a, b in zip(r, pivot)]
                (keep if r2[col] != 0 else rest).append(r2)
            active = keep
        if active:
            p = active[0]
            if p[col] < 0:
                p = [-a for a in p]
            basis.append(p)
        rows = [r for r in rest if any(r)]
    # reduce entries above each pivot into [0, pivot)
    pivots = []
    for b in basis:
        pivots.append(next(i for i, a in enumerate(b) if a != 0))
    for i in range(len(basis)):
        for j in range(i):
            c = pivots[i]
            q = basis[j][c] // basis[i][c]
            if q:
                basis[j] = [a - q * b for a, b in zip(basis[j], basis[i])]
    return [vec(b) for b in basis]


@dataclass(frozen=True)
class LatticeBasis:
    """A full-rank sublattice of Z^d given by a triangular basis (rows)."""

    rows: tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.rows)

    @cached_property
    def index(self) -> int:
        return abs(math.prod(self.rows[i][i] for i in range(self.dim)))

    @cached_property
    def is_identity(self) -> bool:
        return self.index == 1

    def coordinates(self, v: Sequence[int]) -> Vector | None:
        """Integer coordinates of ``v`` in this basis, or ``None`` if ``v`` is not in the lattice."""
        if self.is_identity:
            return tuple(v)
        r = list(v)
        c = []
        for i, b in enumerate(self.rows):
            q, rem = divmod(r[i], b[i])
            if rem:
                return None
            c.append(q)
            if q:
                r = [a - q * x for a, x in zip(r, b)]
        return tuple(c)

    def rational_coordinates(self, v: Sequence[int]) -> tuple[Fraction, ...]:
        r = [Fraction(a) for a in v]
        c = []
        for i, b in enumerate(self.rows):
            q = r[i] / b[i]
            c.append(q)
            r = [a - q * x for a, x in zip(r, b)]
        return tuple(c)

    def point(self, c: Sequence[int]) -> Vector:
        if self.is_identity:
            return tuple(c)
        d = self.dim
        return tuple(sum(c[i] * self.rows[i][j] for i in range(d)) for j in range(d))

    def pull_back(self, weights: Sequence[int]) -> Vector:
        """Express a linear functional in local coordinates."""
        return tuple(dot(weights, b) for b in self.rows)

    @classmethod
    def identity(cls, d: int) -> "LatticeBasis":
        return cls(tuple(tuple(int(i == j) for j in range(d)) for i in range(d)))


class Position(str, Enum):
    OUTSIDE = "outside"
    BOUNDARY = "boundary"
    INTERIOR = "interior"


@dataclass(frozen=True)
class ConePosition:
    kind: Position
    support: frozenset[int]
    """Indices of the rays carrying a positive coefficient."""
    dim: int = 2

    @property
    def on_rays(self) -> frozenset[int]:
        """For boundary points of a 2d cone: the rays the point lies on (both for the origin)."""
        if self.kind is not Position.BOUNDARY:
            return frozenset()
        return self.support or frozenset(range(self.dim))


@dataclass(frozen=True)
class SimplicialCone:
    """Cone spanned by ``d`` linearly independent primitive rays in R^d.

    ``normals[i]`` is the primitive integer functional vanishing on every ray
    except ``rays[i]``, on which it is positive.  A point lies in the cone iff
    all normals are nonnegative on it.
    """

    rays: tuple[Vector, ...]
    normals: tuple[Vector, ...] = field(init=False, repr=False)
    ray_heights: tuple[int, ...] = field(init=False, repr=False)
    det: int = field(init=False, repr=False)

    def __post_init__(self):
        rays = tuple(primitive(vec(r)) for r in self.rays)
        d = len(rays)
        if d == 0 or any(len(r) != d for r in rays):
            raise DimensionMismatch("a simplicial cone in R^d needs exactly d rays")
        D = det(rays)
        if D == 0:
            raise DegenerateCone("cone rays are linearly dependent")
        adj = adjugate(rays)
        sign = 1 if D > 0 else -1
        normals = []
        for j in range(d):
            col = [sign * adj[i][j] for i in range(d)]
            normals.append(primitive(tuple(col)))
        object.__setattr__(self, "rays", rays)
        object.__setattr__(self, "normals", tuple(normals))
        object.__setattr__(self, "ray_heights", tuple(dot(n, r) for n, r in zip(normals, rays)))
        object.__setattr__(self, "det", D)

    @property
    def dim(self) -> int:
        return len(self.rays)

    # two-dimensional naming
    @property
    def ray_low(self) -> Vector:
        return self.rays[0]

    @property
    def ray_high(self) -> Vector:
        return self.rays[1]

    @property
    def n_low(self) -> Vector:
        """Facet functional vanishing on ``ray_low``."""
        return self.normals[1]

    @property
    def n_high(self) -> Vector:
        return self.normals[0]

    def heights(self, v: Sequence[int]) -> tuple[int, ...]:
        return tuple(sum(a * b for a, b in zip(n, v)) for n in self.normals)

    def contains(self, v: Sequence[int]) -> bool:
        for n in self.normals:
            if sum(a * b for a, b in zip(n, v)) < 0:
                return False
        return True

    def position(self, v: Sequence[int]) -> ConePosition:
        if len(v) != self.dim:
            raise DimensionMismatch(f"point of dimension {len(v)} tested against a cone in R^{self.dim}")
        h = self.heights(v)
        support = frozenset(i for i, x in enumerate(h) if x > 0)
        if any(x < 0 for x in h):
            kind = Position.OUTSIDE
        elif len(support) == self.dim:
            kind = Position.INTERIOR
        else:
            kind = Position.BOUNDARY
        return ConePosition(kind, support, self.dim)

    def zero_set(self, v: Sequence[int]) -> frozenset[int]:
        return frozenset(i for i, x in enumerate(self.heights(v)) if x == 0)

    def coefficients(self, v: Sequence[int]) -> tuple[Fraction, ...]:
        """Coordinates of ``v`` with respect to the rays."""
        return tuple(Fraction(x, hr) for x, hr in zip(self.heights(v), self.ray_heights))

    def _box(self, corners: Iterable[Sequence]) -> list[range]:
        corners = list(corners)
        d = self.dim
        lo = [math.floor(min(c[j] for c in corners)) for j in range(d)]
        hi = [math.ceil(max(c[j] for c in corners)) for j in range(d)]
        return [range(a, b + 1) for a, b in zip(lo, hi)]

    def parallelepiped_points(self) -> list[Vector]:
        """Lattice points of the half-open fundamental parallelepiped, sorted lexicographically."""
        d = self.dim
        corners = []
        for mask in product((0, 1), repeat=d):
            corners.append(tuple(sum(m * r[j] for m, r in zip(mask, self.rays)) for j in range(d)))
        pts = []
        for p in product(*self._box(corners)):
            h = self.heights(p)
            if all(0 <= x < hr for x, hr in zip(h, self.ray_heights)):
                pts.append(tuple(p))
        assert len(pts) == abs(self.det), "parallelepiped count disagrees with |det|"
        return sorted(pts)

    def hilbert_basis(self) -> list[Vector]:
        """Minimal generators of the semigroup of lattice points of the cone.

        Any irreducible element is either a ray generator or a nonzero point of
        the fundamental parallelepiped, so reducibility only has to be tested
        against that finite candidate set.
        """
        d = self.dim
        z = zero(d)
        cands = sorted(set(self.rays) | {p for p in self.parallelepiped_points() if p != z})
        basis = []
        for x in cands:
            if not any(c != x and self.contains(tuple(a - b for a, b in zip(x, c))) for c in cands):
                basis.append(x)
        return basis


def cone2d(r1: Sequence[int], r2: Sequence[int]) -> SimplicialCone:
    """Two-dimensional cone with rays ordered so that det(ray_low, ray_high) > 0."""
    a, b = primitive(vec(r1)), primitive(vec(r2))
    if len(a) != 2 or len(b) != 2:
        raise DimensionMismatch("cone2d expects vectors in Z^2")
    D = a[0] * b[1] - a[1] * b[0]
    if D == 0:
        raise DegenerateCone("cone rays are linearly dependent")
    return SimplicialCone((a, b) if D > 0 else (b, a))


def cone_position(v: Sequence[int], cone: SimplicialCone) -> ConePosition:
    return cone.position(v)


def parallelepiped_points(cone: SimplicialCone) -> list[Vector]:
    return cone.parallelepiped_points()


def extreme_rays_2d(vectors: Sequence[Vector]) -> SimplicialCone:
    """The cone spanned by nonzero vectors of a pointed, full-dimensional set in Z^2."""
    dirs = sorted({primitive(v) for v in vectors})
    low = high = None
    for g in dirs:
        if all(g[0] * h[1] - g[1] * h[0] >= 0 for h in dirs):
            low = g
        if all(h[0] * g[1] - h[1] * g[0] >= 0 for h in dirs):
            high = g
    if low is None or high is None or low == high:
        raise DegenerateCone("vectors do not span a pointed two-dimensional cone")
    return SimplicialCone((low, high))


def simplicial_hull(vectors: Sequence[Vector], d: int) -> SimplicialCone | None:
    """Find a simplicial cone spanned by d of the given directions containing all of them."""
    if d == 1:
        signs = {1 if v[0] > 0 else -1 for v in vectors}
        return SimplicialCone(((signs.pop(),),)) if len(signs) == 1 else None
    if d == 2:
        try:
            return extreme_rays_2d(vectors)
        except DegenerateCone:
            return None
    dirs = sorted({primitive(v) for v in vectors})
    for subset in combinations(dirs, d):
        if det(subset) == 0:
            continue
        cone = SimplicialCone(subset)
        if all(cone.contains(v) for v in dirs):
            return cone
    return None
