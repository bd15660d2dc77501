"""Affine semigroup rings as positively graded monomial domains."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

from .errors import (
    DegreeCapExceeded,
    DimensionMismatch,
    EmptyGenerators,
    GroupNotFull,
    NonIntegralDegree,
    NonPositiveDegree,
    UnsupportedDimension,
)
from .lattice import (
    LatticeBasis,
    SimplicialCone,
    Vector,
    hermite_basis,
    primitive,
    simplicial_hull,
    vec,
)


@dataclass(frozen=True)
class Limits:
    """Caps and window overrides shared by every computation on a ring."""

    degree_cap: int = 512
    radical_cap: int = 64
    inverse_slack: int | None = None
    inverse_window: int | None = None
    veronese_window: int | None = None


@dataclass(frozen=True)
class Grading:
    """Degree functional ``v -> (weights . v) / scale``.

    ``scale`` is 1 for user-supplied gradings; Veronese rings divide the parent
    grading by ``k``, which is integral on their lattice but not on all of Z^d.
    """

    weights: Vector
    scale: int = 1

    def __post_init__(self):
        object.__setattr__(self, "weights", vec(self.weights))
        if self.scale <= 0:
            raise ValueError("grading scale must be positive")

    def __call__(self, v: Sequence[int]) -> int:
        if len(v) != len(self.weights):
            raise DimensionMismatch(f"vector of length {len(v)} under a grading of length {len(self.weights)}")
        n = sum(a * b for a, b in zip(self.weights, v))
        q, r = divmod(n, self.scale)
        if r:
            raise NonIntegralDegree(f"{tuple(v)} has non-integral degree {n}/{self.scale}")
        return q

    def is_integral(self, v: Sequence[int]) -> bool:
        return sum(a * b for a, b in zip(self.weights, v)) % self.scale == 0


def _as_grading(grading) -> Grading:
    return grading if isinstance(grading, Grading) else Grading(tuple(grading))


class AffineSemigroupRing:
    """The monomial algebra k[S] of a finitely generated, positively graded semigroup S.

    Elements are exponent vectors in Z^d.  All cone and lattice-point geometry is
    carried out in coordinates of the group generated by S (the identity for
    user-built rings, a finite-index sublattice for Veronese subrings).
    """

    def __init__(self, generators: Iterable[Sequence[int]], grading, *, limits: Limits | None = None,
                 label: str | None = None, _sublattice: bool = False):
        gens = sorted({vec(g) for g in generators})
        if not gens:
            raise EmptyGenerators("a semigroup ring needs at least one generator")
        d = len(gens[0])
        if d == 0 or any(len(g) != d for g in gens):
            raise DimensionMismatch("all generators must have the same positive length")
        grading = _as_grading(grading)
        if len(grading.weights) != d:
            raise DimensionMismatch(f"grading has length {len(grading.weights)}, generators have length {d}")
        for g in gens:
            if not grading.is_integral(g) or grading(g) <= 0:
                raise NonPositiveDegree(f"generator {g} does not have positive degree")
        rows = hermite_basis(gens, d)
        if len(rows) < d:
            raise GroupNotFull(f"generators span a lattice of rank {len(rows)} < {d}; re-embed the semigroup "
                               "in the lattice it generates")
        basis = LatticeBasis(tuple(rows))
        if basis.index != 1 and not _sublattice:
            raise GroupNotFull(f"generators span a sublattice of index {basis.index} in Z^{d}; re-embed the "
                               "semigroup in the lattice it generates")
        self.dim = d
        self.generators: tuple[Vector, ...] = tuple(gens)
        self.grading = grading
        self.limits = limits or Limits()
        self.label = label
        self.basis = basis
        local_w = basis.pull_back(grading.weights)
        if any(w % grading.scale for w in local_w):
            raise NonIntegralDegree("grading is not integral on the lattice generated by the semigroup")
        self._local_weights: Vector = tuple(w // grading.scale for w in local_w)
        self._local_gens: tuple[Vector, ...] = tuple(basis.coordinates(g) for g in gens)
        self._memo: dict[Vector, bool] = {}
        self._slices: dict[int, list[Vector]] = {}
        self._cone_slices: dict[int, list[Vector]] = {}
        self._normal: bool | None = None
        self._veronese: dict[int, AffineSemigroupRing] = {}

    # -- identity -----------------------------------------------------------------

    def _key(self):
        return (self.generators, self.grading.weights, self.grading.scale)

    def __eq__(self, other):
        return isinstance(other, AffineSemigroupRing) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        name = f" {self.label!r}" if self.label else ""
        return f"<AffineSemigroupRing{name} gens={list(self.generators)} grading={self.grading.weights}" + (
            f"/{self.grading.scale}>" if self.grading.scale != 1 else ">")

    # -- degrees and coordinates ---------------------------------------------------

    def degree(self, v: Sequence[int]) -> int:
        return self.grading(v)

    def to_local(self, v: Sequence[int]) -> Vector | None:
        if len(v) != self.dim:
            raise DimensionMismatch(f"vector of length {len(v)} in a ring of dimension {self.dim}")
        return self.basis.coordinates(v)

    def from_local(self, c: Sequence[int]) -> Vector:
        return self.basis.point(c)

    @cached_property
    def local_cone(self) -> SimplicialCone | None:
        """Cone of the semigroup in lattice coordinates, or None when it is not simplicial."""
        return simplicial_hull(self._local_gens, self.dim)

    @cached_property
    def cone(self) -> SimplicialCone | None:
        lc = self.local_cone
        if lc is None:
            return None
        return SimplicialCone(tuple(self.from_local(r) for r in lc.rays))

    def require_cone(self) -> SimplicialCone:
        if self.local_cone is None:
            raise UnsupportedDimension(f"the cone of this ring (d={self.dim}) is not simplicial")
        return self.local_cone

    @cached_property
    def lattice_rays(self) -> tuple[Vector, ...]:
        """Rays of the cone as primitive vectors of the ring's lattice (ambient coordinates)."""
        return tuple(self.from_local(r) for r in self.require_cone().rays)

    @cached_property
    def maxgen_degree(self) -> int:
        return max(self.degree(g) for g in self.minimal_generators)

    @cached_property
    def indeg(self) -> int:
        """Initial degree of the graded maximal ideal."""
        return min(self.degree(g) for g in self.generators)

    # -- membership ----------------------------------------------------------------

    def _check_cap(self, deg: int) -> None:
        if deg > self.limits.degree_cap:
            raise DegreeCapExceeded(f"degree {deg} exceeds the configured cap {self.limits.degree_cap} "
                                    "(raise --degree-cap)")

    def membership(self, v: Sequence[int], method: str = "auto") -> bool:
        """Whether ``v`` is a nonnegative integer combination of the generators.

        ``method="dp"`` forces the degree-graded dynamic program; ``"auto"``
        answers by the cone test once the ring is known to be normal.
        """
        if not self.grading.is_integral(v):
            return False
        c = self.to_local(v)
        if c is None:
            return False
        deg = sum(a * b for a, b in zip(self._local_weights, c))
        if deg < 0:
            return False
        if method == "auto" and self._normal and self.local_cone is not None:
            return self.local_cone.contains(c)
        self._check_cap(deg)
        return self._member_local(c)

    def _member_local(self, c: Vector) -> bool:
        memo = self._memo
        hit = memo.get(c)
        if hit is not None:
            return hit
        gens = self._local_gens
        w = self._local_weights
        cone = self.local_cone
        normals = cone.normals if cone is not None else ()

        def quick(x):
            deg = sum(a * b for a, b in zip(w, x))
            if deg < 0:
                return False
            if deg == 0:
                return not any(x)
            for n in normals:
                if sum(a * b for a, b in zip(n, x)) < 0:
                    return False
            return None

        stack = [c]
        while stack:
            x = stack[-1]
            if x in memo:
                stack.pop()
                continue
            q = quick(x)
            if q is not None:
                memo[x] = q
                stack.pop()
                continue
            found = pushed = False
            for g in gens:
                y = tuple(a - b for a, b in zip(x, g))
                r = memo.get(y)
                if r is None:
                    r = quick(y)
                    if r is None:
                        stack.append(y)
                        pushed = True
                        break
                    memo[y] = r
                if r:
                    found = True
                    break
            if found:
                memo[x] = True
                stack.pop()
            elif not pushed:
                memo[x] = False
                stack.pop()
        return memo[c]

    # -- generators, slices, normality ---------------------------------------------

    @cached_property
    def minimal_generators(self) -> tuple[Vector, ...]:
        gens = self.generators
        out = []
        for g in gens:
            if not any(h != g and self.membership(tuple(a - b for a, b in zip(g, h)), method="dp") for h in gens):
                out.append(g)
        return tuple(sorted(out, key=lambda v: (self.degree(v), v)))

    def _local_cone_slice(self, t: int) -> list[Vector]:
        """Lattice points (local coordinates) of the cone at degree ``t``."""
        cached = self._cone_slices.get(t)
        if cached is not None:
            return cached
        cone = self.require_cone()
        d = self.dim
        w = self._local_weights
        if t < 0:
            pts = []
        elif t == 0:
            pts = [(0,) * d]
        else:
            ray_deg = [sum(a * b for a, b in zip(w, r)) for r in cone.rays]
            verts = [(0,) * d] + [tuple(Fraction(t * x, rd) for x in r) for r, rd in zip(cone.rays, ray_deg)]
            lo = [math.floor(min(v[j] for v in verts)) for j in range(d)]
            hi = [math.ceil(max(v[j] for v in verts)) for j in range(d)]
            nz = [j for j in range(d) if w[j] != 0]
            pivot = min(nz, key=lambda j: math.prod(hi[i] - lo[i] + 1 for i in range(d) if i != j))
            others = [j for j in range(d) if j != pivot]
            pts = []
            for free in product(*(range(lo[j], hi[j] + 1) for j in others)):
                rest = t - sum(w[j] * x for j, x in zip(others, free))
                xp, r = divmod(rest, w[pivot])
                if r:
                    continue
                p = [0] * d
                for j, x in zip(others, free):
                    p[j] = x
                p[pivot] = xp
                p = tuple(p)
                if cone.contains(p):
                    pts.append(p)
            pts.sort()
        self._cone_slices[t] = pts
        return pts

    def cone_slice(self, t: int) -> list[Vector]:
        """Points of the cone lying in the ring's lattice with degree ``t`` (ambient coordinates)."""
        return sorted(self.from_local(c) for c in self._local_cone_slice(t))

    def slice(self, t: int) -> list[Vector]:
        """Semigroup elements of degree ``t``, sorted lexicographically."""
        cached = self._slices.get(t)
        if cached is not None:
            return cached
        self._check_cap(t)
        if self._normal:
            out = [self.from_local(c) for c in self._local_cone_slice(t)]
        else:
            out = [self.from_local(c) for c in self._local_cone_slice(t) if self._member_local(c)]
        out.sort()
        self._slices[t] = out
        return out

    def hilbert_basis(self) -> list[Vector]:
        """Hilbert basis of the cone within the ring's lattice, sorted by (degree, lex)."""
        hb = [self.from_local(c) for c in self.require_cone().hilbert_basis()]
        return sorted(hb, key=lambda v: (self.degree(v), v))

    def is_normal(self) -> bool:
        if self._normal is None:
            self._normal = set(self.minimal_generators) == set(self.hilbert_basis())
        return self._normal

    def conductor_local(self) -> int:
        """For d = 1: smallest lattice coordinate c with every c' >= c in S."""
        if self.dim != 1:
            raise UnsupportedDimension("conductor is only defined for d = 1")
        sign = self.require_cone().rays[0][0]
        m = min(abs(g[0]) for g in self._local_gens)
        run, x = 0, -1
        while run < m:
            x += 1
            self._check_cap(x * abs(self._local_weights[0]))
            if self._member_local((sign * x,)):
                run += 1
            else:
                run = 0
        return x - m + 1

    def local_heights(self, v: Sequence[int]):
        """Facet heights of an ambient point using the lattice-coordinate normals (rational)."""
        cone = self.require_cone()
        c = self.basis.rational_coordinates(v)
        return tuple(sum(a * b for a, b in zip(n, c)) for n in cone.normals)


def new_ring(d: int, generators, grading, *, limits: Limits | None = None,
             label: str | None = None) -> AffineSemigroupRing:
    gens = [vec(g) for g in generators]
    if not gens:
        raise EmptyGenerators("a semigroup ring needs at least one generator")
    if any(len(g) != d for g in gens):
        raise DimensionMismatch(f"generators must have length {d}")
    return AffineSemigroupRing(gens, grading, limits=limits, label=label)


def membership(S: AffineSemigroupRing, v) -> bool:
    return S.membership(vec(v))


def minimal_semigroup_generators(S: AffineSemigroupRing) -> list[Vector]:
    return list(S.minimal_generators)


def hilbert_basis_2d(cone: SimplicialCone) -> list[Vector]:
    if cone.dim != 2:
        raise DimensionMismatch("hilbert_basis_2d expects a cone in R^2")
    return cone.hilbert_basis()


def is_normal(S: AffineSemigroupRing) -> bool:
    return S.is_normal()


# -- radicals of monomial ideals ---------------------------------------------------


class Verdict(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class RadicalEntry:
    target: Vector
    verdict: Verdict
    k: int | None = None
    """Smallest exponent with ``k * target`` in the ideal (YES only)."""
    face: tuple[Vector, ...] = ()
    """Rays spanning the smallest face containing the target (NO only)."""
    cap: int | None = None


@dataclass(frozen=True)
class RadicalVerdict:
    entries: tuple[RadicalEntry, ...]
    generator_entries: tuple[RadicalEntry, ...] = field(repr=False, default=())
    m_primary: bool | None = None

    def __getitem__(self, target) -> RadicalEntry:
        target = tuple(target)
        for e in self.entries + self.generator_entries:
            if e.target == target:
                return e
        raise KeyError(target)


def _tri_and(values: Iterable[bool | None]) -> bool | None:
    vals = list(values)
    if any(v is False for v in vals):
        return False
    if any(v is None for v in vals):
        return None
    return True


def _radical_entry(S: AffineSemigroupRing, gens: Sequence[Vector], u: Vector) -> RadicalEntry:
    if not gens:
        return RadicalEntry(u, Verdict.NO, face=())

    def hit(x):
        return any(S.membership(tuple(a - b for a, b in zip(x, g))) for g in gens)

    if not any(u):
        return RadicalEntry(u, Verdict.YES, k=1) if hit(u) else RadicalEntry(u, Verdict.NO)
    cone = S.require_cone()
    cu = S.to_local(u)
    zu = cone.zero_set(cu)
    face_ok = any(cone.zero_set(S.to_local(g)) >= zu for g in gens)
    if not face_ok:
        face = tuple(S.from_local(r) for i, r in enumerate(cone.rays) if i not in zu)
        return RadicalEntry(u, Verdict.NO, face=face)
    deg = S.degree(u)
    exact = S.is_normal()
    cap = None if exact else S.limits.radical_cap
    k = 1
    while True:
        x = tuple(k * a for a in u)
        if deg * k > S.limits.degree_cap and not exact:
            return RadicalEntry(u, Verdict.UNKNOWN, cap=k - 1)
        if hit(x):
            return RadicalEntry(u, Verdict.YES, k=k)
        if cap is not None and k >= cap:
            return RadicalEntry(u, Verdict.UNKNOWN, cap=cap)
        k += 1


def radical_test(S: AffineSemigroupRing, J, targets=None) -> RadicalVerdict:
    """Decide membership of ``targets`` in the radical of the monomial ideal ``J``.

    A nonzero target u can only lie in the radical if some generator of J lies
    in the smallest face of the cone containing u; failing that test gives an
    exact NO.  Otherwise a YES is certified by an explicit exponent k, which
    always exists for normal rings and is searched up to ``radical_cap`` for
    the others.  The aggregate ``m_primary`` flag ranges over the minimal
    generators of the ring.
    """
    gens = [tuple(g) for g in (J.generators if hasattr(J, "generators") else J)]
    for g in gens:
        if not S.membership(g):
            raise ValueError(f"{g} is not in the semigroup; radical_test needs an ideal")
    mingens = S.minimal_generators
    targets = list(mingens) if targets is None else [vec(t) for t in targets]
    cache: dict[Vector, RadicalEntry] = {}

    def entry(u):
        if u not in cache:
            cache[u] = _radical_entry(S, gens, u)
        return cache[u]

    entries = tuple(entry(u) for u in targets)
    gen_entries = tuple(entry(u) for u in mingens)
    m_primary = _tri_and({Verdict.YES: True, Verdict.NO: False}.get(e.verdict) for e in gen_entries)
    return RadicalVerdict(entries, gen_entries, m_primary)


def degree_part(S: AffineSemigroupRing, t: int, module=None) -> list[Vector]:
    """Elements of degree ``t`` of S (or of the ideal ``module``)."""
    pts = S.slice(t)
    if module is None:
        return pts
    return [p for p in pts if module.contains(p)]


__all__ = [
    "AffineSemigroupRing", "Grading", "Limits", "RadicalEntry", "RadicalVerdict", "Verdict",
    "degree_part", "hilbert_basis_2d", "is_normal", "membership", "minimal_semigroup_generators",
    "new_ring", "primitive", "radical_test",
]
