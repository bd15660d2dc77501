"""Graded canonical modules of normal and numerical semigroup rings."""

from __future__ import annotations

from .errors import UnsupportedRing
from .modules import MonomialModule, minimize_generators
from .numerical import numerical_profile
from .semigroup import AffineSemigroupRing


def _interior_candidates(S: AffineSemigroupRing):
    # Interior lattice points whose ray coefficients all lie in (0, 1]: every
    # other interior point is one of these plus a ray generator.
    cone = S.require_cone()
    for p in cone.parallelepiped_points():
        h = cone.heights(p)
        x = list(p)
        for i, r in enumerate(cone.rays):
            if h[i] == 0:
                x = [a + b for a, b in zip(x, r)]
        yield S.from_local(x)


def canonical_module(S: AffineSemigroupRing) -> MonomialModule:
    """Canonical module with its natural grading.

    Normal rings: the ideal of interior lattice points of the cone.  Numerical
    rings: generated by ``-f`` for the pseudo-Frobenius numbers f, so that the
    lowest degree is ``-F`` and the a-invariant equals the Frobenius number.
    """
    if S.dim == 1:
        sign = S.require_cone().rays[0][0]
        T = numerical_profile(sign * c[0] for c in S._local_gens)
        return minimize_generators(S, [S.from_local((-sign * f,)) for f in T.pseudo_frobenius])
    if S.local_cone is None or not S.is_normal():
        raise UnsupportedRing("canonical modules are only constructed for normal rings with simplicial cones "
                              "and numerical semigroup rings; supply canonical_generators instead")
    return minimize_generators(S, _interior_candidates(S))


def user_canonical(S: AffineSemigroupRing, gens) -> MonomialModule:
    """Wrap caller-supplied canonical generators; reports flag them as unverified."""
    return minimize_generators(S, gens, verified=False)


def a_invariant(S: AffineSemigroupRing, omega: MonomialModule) -> int:
    return -min(S.degree(g) for g in omega.generators)


def min_degree_dim(S: AffineSemigroupRing, omega: MonomialModule) -> int:
    # distinct points of equal degree are incomparable, so each one is a generator
    low = min(S.degree(g) for g in omega.generators)
    return sum(1 for g in omega.generators if S.degree(g) == low)
