import pytest
from hypothesis import given, settings, strategies as st

from oracles import closure
from tracegor import canonical_module, classify, h_vector, hilbert_function, numerical_profile, trace_module
from tracegor.errors import NotSemiStandard
from tracegor.harness import nonlevel_ring, polynomial_ring, random_normal_2d
from tracegor.numerical import to_ring
from tracegor.veronese import veronese_ring


def test_nonlevel_report():
    r = classify(nonlevel_ring())
    assert (r.gorenstein, r.quasi_gorenstein, r.pseudo_gorenstein, r.level, r.nearly_gorenstein) == (
        False, False, True, False, True)
    assert (r.natural_condition, r.semi_standard, r.cm_type, r.a_invariant) == (False, False, 2, -1)
    assert r.omega_generator_degrees == (1, 2) and r.canonical_verified
    d = r.to_dict()
    assert d["trace_generators"] == [[1, 0], [1, 1], [2, 3], [3, 5]]


def test_small_examples():
    r = classify(to_ring(numerical_profile([2, 3])))
    assert r.gorenstein and r.cm_type == 1
    V = veronese_ring(polynomial_ring(2), 3)
    r = classify(V)
    assert (r.gorenstein, r.level, r.cm_type, r.nearly_gorenstein) == (False, True, 2, True)


def test_hilbert_function():
    assert [hilbert_function(nonlevel_ring(), n) for n in range(4)] == [1, 2, 4, 6]
    N2 = polynomial_ring(2)
    assert [hilbert_function(N2, n) for n in range(6)] == [n + 1 for n in range(6)]
    V = veronese_ring(N2, 3)
    assert [hilbert_function(V, n) for n in range(6)] == [3 * n + 1 for n in range(6)]
    assert hilbert_function(N2, -1) == 0


def test_h_vectors():
    h = h_vector(veronese_ring(polynomial_ring(2), 3))
    assert (h.h, h.socle_degree, h.multiplicity, h.minimal_multiplicity) == ((1, 2), 1, 3, True)
    h = h_vector(polynomial_ring(2))
    assert (h.h, h.socle_degree, h.multiplicity) == ((1,), 0, 1)
    with pytest.raises(NotSemiStandard) as e:
        h_vector(nonlevel_ring())
    assert e.value.witness == (3, 5)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_report_invariants(seed):
    S = random_normal_2d(seed)
    r = classify(S)
    assert r.implication_violations() == []
    # nearly Gorenstein agrees with degreewise trace membership
    T = trace_module(canonical_module(S))
    C = closure(S.generators, S.grading.weights, S.maxgen_degree)
    brute = all(any(tuple(a - b for a, b in zip(g, t)) in C for t in T.generators) for g in S.minimal_generators)
    assert r.nearly_gorenstein == brute
    if r.natural_condition and S.dim >= 2 and r.pseudo_gorenstein:
        assert r.gorenstein
    if r.semi_standard and S.indeg == 1:
        h = h_vector(S)
        assert h.h[0] == 1 and all(x >= 0 for x in h.h)
        assert h.h[-1] == r.min_degree_dim
        # multiplicity is the leading growth of the Hilbert function
        n = 40
        assert hilbert_function(S, n + 1) - hilbert_function(S, n) == h.multiplicity
