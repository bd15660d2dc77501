"""Monomial fractional ideals over affine semigroup rings.

A module is the set ``{g + s : g in generators, s in S}`` inside the group Z^d.
The quotient field is never materialised; its monomials are just lattice vectors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, EmptyGenerators, WindowUnstable
from .lattice import Vector, vec
from .semigroup import AffineSemigroupRing


def _sub(v, w):
    return tuple(a - b for a, b in zip(v, w))


def _add(v, w):
    return tuple(a + b for a, b in zip(v, w))


@dataclass(frozen=True, eq=False)
class MonomialModule:
    ring: AffineSemigroupRing
    generators: tuple[Vector, ...]
    verified: bool = True
    """False for canonical modules supplied by the user rather than constructed."""

    def __eq__(self, other):
        return (isinstance(other, MonomialModule) and self.ring == other.ring
                and self.generators == other.generators)

    def __hash__(self):
        return hash((self.ring, self.generators))

    def __repr__(self):
        return f"MonomialModule({list(self.generators)})"

    def __len__(self):
        return len(self.generators)

    def contains(self, v: Sequence[int]) -> bool:
        S = self.ring
        return any(S.membership(_sub(v, g)) for g in self.generators)

    __contains__ = contains

    @property
    def degrees(self) -> list[int]:
        return [self.ring.degree(g) for g in self.generators]

    @property
    def is_ideal(self) -> bool:
        return all(self.ring.membership(g) for g in self.generators)

    @property
    def is_principal(self) -> bool:
        return len(self.generators) == 1

    @property
    def is_unit(self) -> bool:
        """True iff the module is the whole ring."""
        return self.generators == ((0,) * self.ring.dim,)

    def shift(self, w: Sequence[int]) -> "MonomialModule":
        return MonomialModule(self.ring, _sort(self.ring, [_add(g, w) for g in self.generators]), self.verified)

    def elements_of_degree(self, t: int) -> list[Vector]:
        S = self.ring
        out = set()
        for g in self.generators:
            dg = S.degree(g)
            if dg <= t:
                out.update(_add(g, s) for s in S.slice(t - dg))
        return sorted(out)


def _sort(S: AffineSemigroupRing, gens: Iterable[Vector]) -> tuple[Vector, ...]:
    return tuple(sorted(set(gens), key=lambda v: (S.degree(v), v)))


def minimize_generators(ring: AffineSemigroupRing, raw: Iterable[Sequence[int]], *,
                        verified: bool = True) -> MonomialModule:
    """Discard every generator that lies in the submodule generated by another one."""
    pts = _sort(ring, (vec(g) for g in raw))
    if not pts:
        raise EmptyGenerators("a monomial module needs at least one generator")
    for p in pts:
        if len(p) != ring.dim:
            raise DimensionMismatch(f"generator {p} does not live in Z^{ring.dim}")
    keep = [g for g in pts if not any(h != g and ring.membership(_sub(g, h)) for h in pts)]
    return MonomialModule(ring, tuple(keep), verified)


def principal(ring: AffineSemigroupRing, v: Sequence[int]) -> MonomialModule:
    return MonomialModule(ring, (vec(v),))


def unit_module(ring: AffineSemigroupRing) -> MonomialModule:
    return principal(ring, (0,) * ring.dim)


def module_membership(M: MonomialModule, v: Sequence[int]) -> bool:
    if len(v) != M.ring.dim:
        raise DimensionMismatch(f"vector of length {len(v)} tested in a module over Z^{M.ring.dim}")
    return M.contains(tuple(v))


def multiply_modules(A: MonomialModule, B: MonomialModule) -> MonomialModule:
    if A.ring != B.ring:
        raise ValueError("modules live over different rings")
    return minimize_generators(A.ring, (_add(a, b) for a in A.generators for b in B.generators),
                               verified=A.verified and B.verified)


def _exact_inverse_bound(I: MonomialModule) -> int | None:
    """Provable degree bound for minimal generators of the inverse, when one is available.

    Normal rings: the inverse is the set of lattice points of a translated cone,
    whose minimal generators lie in a half-open translated parallelepiped.
    Dimension one: every element past the conductor shifted by the smallest
    generator lies in the inverse.
    """
    S = I.ring
    cone = S.local_cone
    if cone is None:
        return None
    if S.is_normal():
        w = S._local_weights
        hts = [S.local_heights(g) for g in I.generators]
        total = Fraction(0)
        for i, (r, hr) in enumerate(zip(cone.rays, cone.ray_heights)):
            c_i = max(-h[i] for h in hts)
            total += (Fraction(c_i, hr) + 1) * sum(a * b for a, b in zip(w, r))
        return math.floor(total)
    if S.dim == 1:
        sign = cone.rays[0][0]
        cc = S.conductor_local()
        m = min(abs(g[0]) for g in S._local_gens)
        low = min(sign * S.basis.rational_coordinates(g)[0] for g in I.generators)
        return math.floor((cc - low + m) * abs(S._local_weights[0]))
    return None


def inverse_module(I: MonomialModule) -> MonomialModule:
    """Minimal generators of ``{v : v + g in S for every generator g of I}``.

    Candidates are scanned degree by degree from ``-min deg(I)`` up to a bound
    B, then a verification sweep past B must find nothing new; otherwise
    :class:`WindowUnstable` is raised.
    """
    S = I.ring
    gens = I.generators
    degs = [S.degree(g) for g in gens]
    lo = -min(degs)
    lim = S.limits
    if lim.inverse_window is not None:
        B = lim.inverse_window
    else:
        B = _exact_inverse_bound(I)
        if B is None:
            slack = lim.inverse_slack if lim.inverse_slack is not None else 4 * S.maxgen_degree
            B = max(degs) + max(S.degree(h) for h in S.hilbert_basis()) + slack
    B = max(B, lo)
    g0 = gens[degs.index(min(degs))]
    d0 = min(degs)

    def candidates(t):
        for s in S.slice(t + d0):
            v = _sub(s, g0)
            if all(S.membership(_add(v, g)) for g in gens):
                yield v

    found: list[Vector] = []

    def covered(v):
        return any(S.membership(_sub(v, h)) for h in found)

    for t in range(lo, B + 1):
        for v in candidates(t):
            if not covered(v):
                found.append(v)
    end = max(2 * B, B + max(B - lo, S.maxgen_degree))
    for t in range(B + 1, end + 1):
        for v in candidates(t):
            if not covered(v):
                raise WindowUnstable(f"inverse module gained generator {v} of degree {t} beyond the window "
                                     f"bound {B} (raise --inverse-window)")
    return MonomialModule(S, _sort(S, found), I.verified)


def trace_module(I: MonomialModule) -> MonomialModule:
    """Trace ideal of a rank-one module, computed as I times its inverse."""
    return multiply_modules(I, inverse_module(I))
