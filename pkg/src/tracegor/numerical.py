"""Numerical semigroups: gaps, Frobenius number, Apéry sets, pseudo-Frobenius numbers."""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Iterable

from .errors import EmptyInput, GcdNotOne
from .semigroup import AffineSemigroupRing, Limits


def apery_set(gens: Iterable[int], m: int | None = None) -> tuple[int, ...]:
    """Apéry set with respect to ``m`` (default: the smallest generator).

    Entry ``r`` is the least semigroup element congruent to ``r`` mod ``m``;
    computed as shortest paths on the residues mod ``m``.
    """
    gens = sorted(set(gens))
    m = gens[0] if m is None else m
    dist = [math.inf] * m
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        w, r = heapq.heappop(heap)
        if w > dist[r]:
            continue
        for g in gens:
            nw, nr = w + g, (r + g) % m
            if nw < dist[nr]:
                dist[nr] = nw
                heapq.heappush(heap, (nw, nr))
    return tuple(int(x) for x in dist)


@dataclass(frozen=True)
class NumericalSemigroup:
    generators: tuple[int, ...]
    multiplicity: int
    apery: tuple[int, ...]
    frobenius: int
    genus: int
    gaps: tuple[int, ...]
    pseudo_frobenius: tuple[int, ...]
    symmetric: bool
    almost_symmetric: bool

    @property
    def type(self) -> int:
        return len(self.pseudo_frobenius)

    @property
    def conductor(self) -> int:
        return self.frobenius + 1

    def __contains__(self, x: int) -> bool:
        return x >= 0 and x >= self.apery[x % self.multiplicity]

    def label(self) -> str:
        return "<" + ",".join(map(str, self.generators)) + ">"


def numerical_profile(gens: Iterable[int]) -> NumericalSemigroup:
    gens = sorted(set(int(g) for g in gens))
    if not gens:
        raise EmptyInput("a numerical semigroup needs at least one generator")
    if gens[0] <= 0:
        raise ValueError("numerical semigroup generators must be positive")
    if math.gcd(*gens) != 1:
        raise GcdNotOne(f"generators {gens} have gcd {math.gcd(*gens)}; the complement in N would be infinite")
    m = gens[0]
    ap = apery_set(gens, m)

    def member(x):
        return x >= 0 and x >= ap[x % m]

    F = max(ap) - m
    gaps = tuple(x for x in range(1, F + 1) if not member(x))
    # PF = {w - m : w maximal in Ap(S, m) under w <=_S w'}
    apset = set(ap)
    pf = sorted(w - m for w in ap if not any(v != w and member(v - w) for v in apset))
    minimal = tuple(g for g in gens if not any(h != g and member(g - h) for h in gens))
    symmetric = all((x in gaps) == member(F - x) for x in range(0, F + 1))
    t = len(pf)
    return NumericalSemigroup(
        generators=minimal,
        multiplicity=m,
        apery=ap,
        frobenius=F,
        genus=len(gaps),
        gaps=gaps,
        pseudo_frobenius=tuple(pf),
        symmetric=symmetric,
        almost_symmetric=2 * len(gaps) == F + t,
    )


def pseudo_frobenius_by_definition(N: NumericalSemigroup) -> tuple[int, ...]:
    """PF via its defining property, checked against the minimal generators."""
    if not N.gaps:
        return (-1,)
    return tuple(x for x in N.gaps if all((x + s) in N for s in N.generators))


def to_ring(N: NumericalSemigroup, limits: Limits | None = None) -> AffineSemigroupRing:
    return AffineSemigroupRing([(g,) for g in N.generators], (1,), limits=limits, label=N.label())
