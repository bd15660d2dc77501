import pytest
from hypothesis import given, settings, strategies as st

from oracles import closure
from tracegor import AffineSemigroupRing, Limits, Verdict, is_normal, membership, new_ring, radical_test
from tracegor.errors import (DegreeCapExceeded, DimensionMismatch, EmptyGenerators, GroupNotFull,
                             NonPositiveDegree, UnsupportedDimension)
from tracegor.harness import nonlevel_ring, random_normal_2d

gen2 = st.tuples(st.integers(0, 4), st.integers(0, 4)).filter(lambda v: v != (0, 0))


def _ring_or_none(gens):
    try:
        return AffineSemigroupRing(gens, (1, 1))
    except GroupNotFull:
        return None


@settings(max_examples=60, deadline=None)
@given(st.lists(gen2, min_size=2, max_size=5))
def test_membership_matches_closure(gens):
    S = _ring_or_none(gens)
    if S is None:
        return
    D = 10
    C = closure(S.generators, (1, 1), D)
    for x in range(-1, D + 1):
        for y in range(-1, D + 1 - max(x, 0)):
            assert S.membership((x, y), method="dp") == ((x, y) in C)
            assert S.membership((x, y)) == ((x, y) in C)


@settings(max_examples=40, deadline=None)
@given(st.lists(gen2, min_size=2, max_size=5))
def test_minimal_generators_irreducible_and_generating(gens):
    S = _ring_or_none(gens)
    if S is None:
        return
    mg = S.minimal_generators
    C = closure(mg, (1, 1), 8)
    assert C == closure(S.generators, (1, 1), 8)
    for g in mg:
        others = [h for h in mg if h != g]
        assert g not in closure(others, (1, 1), sum(g)) if others else True


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_slices_match_closure(seed):
    S = random_normal_2d(seed)
    top = 3 * S.maxgen_degree
    C = closure(S.generators, S.grading.weights, top)
    for t in range(top + 1):
        assert sorted(S.slice(t)) == sorted(p for p in C if S.degree(p) == t)


def test_nonlevel_ring_basics():
    P = nonlevel_ring()
    assert P.minimal_generators == ((1, 0), (1, 1), (2, 3), (3, 5))
    assert is_normal(P)
    assert membership(P, (2, 2)) and not membership(P, (1, 2)) and membership(P, (0, 0))
    assert [len(P.slice(n)) for n in range(4)] == [1, 2, 4, 6]


def test_non_normal_detection():
    S = AffineSemigroupRing([(2, 0), (1, 1), (0, 2), (3, 0), (0, 3)], (1, 1))
    assert not S.is_normal()
    assert AffineSemigroupRing([(1, 0), (1, 1), (1, 2)], (1, 0)).is_normal()


def test_construction_errors():
    with pytest.raises(EmptyGenerators):
        new_ring(2, [], (1, 1))
    with pytest.raises(DimensionMismatch):
        AffineSemigroupRing([(1, 0), (1,)], (1, 1))
    with pytest.raises(GroupNotFull):
        AffineSemigroupRing([(2, 0), (0, 2)], (1, 1))
    with pytest.raises(GroupNotFull):
        AffineSemigroupRing([(1, 1), (2, 2)], (1, 1))
    with pytest.raises(NonPositiveDegree):
        AffineSemigroupRing([(1, 0), (0, 1)], (1, 0))
    with pytest.raises(DegreeCapExceeded):
        nonlevel_ring(Limits(degree_cap=2)).slice(3)


def test_radical_nonlevel_example():
    P = nonlevel_ring()
    v = radical_test(P, [(1, 0), (1, 1)])
    assert v[(3, 5)].verdict is Verdict.NO and v[(3, 5)].face == ((3, 5),)
    assert v[(2, 3)].verdict is Verdict.YES and v[(2, 3)].k == 2
    assert v.m_primary is False
    assert radical_test(P, [(1, 0), (3, 5)]).m_primary is True


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 3))
def test_radical_yes_certificates_and_no_by_bruteforce(seed, n):
    S = random_normal_2d(seed)
    pool = [p for t in range(1, S.maxgen_degree + 1) for p in S.slice(t)]
    J = pool[:n]
    res = radical_test(S, J)
    C = closure(S.generators, S.grading.weights, 40 * S.maxgen_degree)
    for e in res.generator_entries:
        powers = [tuple(k * a for a in e.target) for k in range(1, 30)]
        hit = [any(tuple(a - b for a, b in zip(x, g)) in C for g in J) for x in powers]
        if e.verdict is Verdict.YES:
            assert hit[e.k - 1] and not any(hit[: e.k - 1])
        else:
            assert e.verdict is Verdict.NO and not any(hit)


def test_radical_unknown_on_capped_non_normal():
    gens = [(2, 0), (1, 1), (0, 2), (3, 0), (0, 3)]
    capped = AffineSemigroupRing(gens, (1, 1), limits=Limits(radical_cap=2))
    res = radical_test(capped, [(3, 0), (0, 3)])
    assert res[(1, 1)].verdict is Verdict.UNKNOWN and res[(1, 1)].cap == 2
    assert res.m_primary is None
    full = radical_test(AffineSemigroupRing(gens, (1, 1)), [(3, 0), (0, 3)])
    assert full[(1, 1)].verdict is Verdict.YES and full[(1, 1)].k == 3
    assert full.m_primary is True


def test_radical_rejects_non_ideal():
    with pytest.raises(ValueError):
        radical_test(nonlevel_ring(), [(0, 1)])


def test_non_simplicial_cone_is_reported():
    S = AffineSemigroupRing([(1, 0, 1), (0, 1, 1), (1, 1, 1), (0, 0, 1)], (0, 0, 1))
    assert S.membership((2, 1, 2))
    with pytest.raises(UnsupportedDimension):
        S.require_cone()
