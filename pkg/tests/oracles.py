"""Brute-force reference implementations sharing no code with the package."""

from __future__ import annotations

import itertools
from fractions import Fraction


def closure(gens, weights, max_deg, scale=1):
    """All sums of generators with degree <= max_deg, by breadth-first expansion."""
    d = len(weights)

    def deg(v):
        return sum(a * b for a, b in zip(weights, v)) / scale

    zero = (0,) * d
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                w = tuple(a + b for a, b in zip(v, g))
                if deg(w) <= max_deg and w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return seen


def minimal_elements(points, member):
    """Elements of ``points`` not of the form q + s with q in points and 0 != s in the semigroup."""
    pts = set(points)
    return sorted(p for p in pts if not any(q != p and member(tuple(a - b for a, b in zip(p, q))) for q in pts))


def laplace_det(m):
    m = [list(r) for r in m]
    if len(m) == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * laplace_det([r[:j] + r[j + 1:] for r in m[1:]]) for j in range(len(m)))


def cone_points_2d(r1, r2, box):
    """Lattice points of cone(r1, r2) inside [-box, box]^2, via rational coefficients."""
    det = r1[0] * r2[1] - r1[1] * r2[0]
    out = []
    for x in range(-box, box + 1):
        for y in range(-box, box + 1):
            a = Fraction(x * r2[1] - y * r2[0], det)
            b = Fraction(r1[0] * y - r1[1] * x, det)
            if a >= 0 and b >= 0:
                out.append((x, y))
    return out


def interior_points_2d(r1, r2, box):
    det = r1[0] * r2[1] - r1[1] * r2[0]
    out = []
    for x in range(-box, box + 1):
        for y in range(-box, box + 1):
            a = Fraction(x * r2[1] - y * r2[0], det)
            b = Fraction(r1[0] * y - r1[1] * x, det)
            if a > 0 and b > 0:
                out.append((x, y))
    return out


def hilbert_basis_bruteforce(r1, r2, box):
    pts = [p for p in cone_points_2d(r1, r2, box) if p != (0, 0)]
    ps = set(pts)
    return sorted(p for p in pts
                  if not any(q != p and tuple(a - b for a, b in zip(p, q)) in ps for q in pts))


def numerical_bruteforce(gens, limit=None):
    """Gaps, Frobenius number and pseudo-Frobenius numbers straight from the definitions."""
    gens = sorted(gens)
    limit = limit or gens[0] * gens[-1] + 1
    S = set(closure([(g,) for g in gens], (1,), limit))
    elems = {v[0] for v in S}
    gaps = [x for x in range(1, limit) if x not in elems]
    F = max(gaps) if gaps else -1
    nonzero = [s for s in elems if 0 < s <= F + gens[-1] + 1]
    pf = [x for x in range(-1, F + 1) if x not in elems and all((x + s) in elems or x + s > F for s in nonzero)]
    if not gaps:
        pf = [-1]
    return gaps, F, pf


def inverse_bruteforce(gens_S, weights, ideal, hi):
    """Minimal generators of {v : v + I in S} with degree <= hi."""
    maxdeg_I = max(sum(a * b for a, b in zip(weights, g)) for g in ideal)
    g0 = min(ideal, key=lambda g: sum(a * b for a, b in zip(weights, g)))
    d0 = sum(a * b for a, b in zip(weights, g0))
    C = closure(gens_S, weights, hi + maxdeg_I)
    cands = []
    for s in C:
        if sum(a * b for a, b in zip(weights, s)) - d0 > hi:
            continue
        v = tuple(a - b for a, b in zip(s, g0))
        if all(tuple(a + b for a, b in zip(v, g)) in C for g in ideal):
            cands.append(v)
    return minimal_elements(cands, lambda x: x in C)


def canonical_bruteforce_2d(r1, r2, gens, weights, hi):
    """Minimal interior lattice points of the cone, up to degree hi."""
    C = closure(gens, weights, 2 * hi)
    box = 7 * hi + 7
    pts = [p for p in interior_points_2d(r1, r2, box) if sum(a * b for a, b in zip(weights, p)) <= hi]
    return minimal_elements(pts, lambda x: x in C)


def subsets(xs, max_size):
    for r in range(1, max_size + 1):
        yield from itertools.combinations(xs, r)
