import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from oracles import cone_points_2d, hilbert_basis_bruteforce, laplace_det
from tracegor.errors import DegenerateCone, DimensionMismatch, LatticeOverflow, ZeroVector
from tracegor.lattice import (INT_MAX, LatticeBasis, Position, SimplicialCone, add, cone2d, det, dot,
                              hermite_basis, parallelepiped_points, primitive, simplicial_hull, sub, vec)

small = st.integers(-6, 6)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n,
                                                     max_size=n)))
def test_det_matches_laplace(m):
    assert det(m) == laplace_det(m)


def test_overflow_is_loud():
    with pytest.raises(LatticeOverflow):
        add((INT_MAX,), (1,))
    with pytest.raises(LatticeOverflow):
        vec([2**64])
    with pytest.raises(DimensionMismatch):
        sub((1, 2), (1,))
    with pytest.raises(DimensionMismatch):
        dot((1, 2), (1, 2, 3))


def test_primitive():
    assert primitive((6, -4)) == (3, -2)
    with pytest.raises(ZeroVector):
        primitive((0, 0))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(small, small), min_size=2, max_size=5))
def test_hermite_basis_spans_same_group(vs):
    rows = hermite_basis(vs, 2)
    if len(rows) < 2:
        return
    B = LatticeBasis(tuple(rows))
    # every input lies in the lattice, and every basis row is an integer combination of the inputs
    assert all(B.coordinates(v) is not None for v in vs)
    # a rank-2 subgroup of Z^2 has index equal to the gcd of all 2x2 minors of its generators
    minors = [a[0] * b[1] - a[1] * b[0] for a, b in itertools.combinations(vs, 2)]
    assert B.index == math.gcd(*minors)


def test_lattice_basis_round_trip():
    B = LatticeBasis(((2, 1), (0, 3)))
    assert B.index == 6
    for c in itertools.product(range(-3, 4), repeat=2):
        assert B.coordinates(B.point(c)) == c
    assert B.coordinates((1, 0)) is None


ray = st.tuples(st.integers(-5, 5), st.integers(-5, 5)).filter(lambda v: v != (0, 0))


@settings(max_examples=80, deadline=None)
@given(ray, ray)
def test_parallelepiped_count_is_det(r1, r2):
    if r1[0] * r2[1] - r1[1] * r2[0] == 0:
        with pytest.raises(DegenerateCone):
            cone2d(r1, r2)
        return
    C = cone2d(r1, r2)
    pts = parallelepiped_points(C)
    assert len(pts) == abs(C.det)
    assert len(set(pts)) == len(pts)
    assert all(all(0 <= c < 1 for c in C.coefficients(p)) for p in pts)


@settings(max_examples=40, deadline=None)
@given(ray, ray)
def test_hilbert_basis_matches_bruteforce(r1, r2):
    if r1[0] * r2[1] - r1[1] * r2[0] == 0:
        return
    C = cone2d(r1, r2)
    p1, p2 = C.rays
    box = 2 * (abs(p1[0]) + abs(p1[1]) + abs(p2[0]) + abs(p2[1]))
    got = sorted(C.hilbert_basis())
    assert got == hilbert_basis_bruteforce(p1, p2, box)


def test_positions():
    C = cone2d((1, 0), (3, 5))
    assert C.position((2, 2)).kind is Position.INTERIOR
    assert C.position((3, 5)).kind is Position.BOUNDARY
    assert C.position((0, 1)).kind is Position.OUTSIDE
    assert C.position((0, 0)).kind is Position.BOUNDARY
    assert sorted(C.parallelepiped_points()) == [(0, 0), (1, 1), (2, 2), (2, 3), (3, 4)]
    assert set(cone_points_2d((1, 0), (3, 5), 3)) == {p for p in itertools.product(range(-3, 4), repeat=2)
                                                      if C.contains(p)}


def test_simplicial_hull_three_dim():
    C = simplicial_hull([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)], 3)
    assert C is not None and sorted(C.rays) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    assert simplicial_hull([(1, 0, 1), (0, 1, 1), (1, 1, 1), (0, 0, 1)], 3) is None


def test_simplicial_cone_hilbert_basis_3d():
    C = SimplicialCone(((1, 0, 0), (0, 1, 0), (1, 1, 2)))
    assert len(C.parallelepiped_points()) == 2
    assert sorted(C.hilbert_basis()) == [(0, 1, 0), (1, 0, 0), (1, 1, 1), (1, 1, 2)]
