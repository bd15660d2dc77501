"""Pinned reference values, runnable as ``tracegor examples --run-all``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from .canonical import canonical_module
from .errors import NotSemiStandard
from .harness import TheoremInstance, check_theorem, nonlevel_ring, polynomial_ring
from .invariants import classify, h_vector, hilbert_function
from .modules import inverse_module, trace_module
from .numerical import numerical_profile, to_ring
from .semigroup import Verdict, radical_test
from .veronese import okokok_check, veronese_module, veronese_ring


@dataclass(frozen=True)
class Example:
    name: str
    expected: Any
    compute: Callable[[], Any]

    def run(self) -> tuple[bool, Any]:
        got = self.compute()
        return got == self.expected, got


def _lists(vs):
    return sorted(list(v) for v in vs)


def _nonlevel_classification():
    r = classify(nonlevel_ring())
    return {"normal": r.normal, "omega": _lists(r.omega_generators), "trace": _lists(r.trace_generators),
            "nearly": r.nearly_gorenstein, "pseudo": r.pseudo_gorenstein, "level": r.level, "type": r.cm_type,
            "gorenstein": r.gorenstein, "quasi": r.quasi_gorenstein, "natural": r.natural_condition,
            "semi_standard": r.semi_standard, "a": r.a_invariant}


def _nonlevel_radical():
    P = nonlevel_ring()
    T = trace_module(canonical_module(P))
    part = [p for p in P.slice(1) if T.contains(p)]
    e = radical_test(P, part)[(3, 5)]
    return {"degree_one_trace": _lists(part), "verdict": e.verdict.value, "exact": e.verdict is Verdict.NO}


def _nonlevel_h_vector():
    try:
        h_vector(nonlevel_ring())
    except NotSemiStandard as e:
        return {"error": "NotSemiStandard", "witness": list(e.witness)}
    return {"error": None}


def _nonlevel_inverse():
    w = canonical_module(nonlevel_ring())
    return _lists(inverse_module(w).generators)


def _numerical(gens):
    N = numerical_profile(gens)
    S = to_ring(N)
    w = canonical_module(S)
    r = classify(S, w)
    return {"frobenius": N.frobenius, "pf": list(N.pseudo_frobenius), "omega": _lists(w.generators),
            "trace": _lists(r.trace_generators), "gorenstein": r.gorenstein, "type": r.cm_type,
            "a": r.a_invariant}


def _third_veronese():
    V = veronese_ring(polynomial_ring(2), 3)
    h = h_vector(V)
    r = classify(V)
    return {"h": list(h.h), "s": h.socle_degree, "e": h.multiplicity, "minimal_multiplicity": h.minimal_multiplicity,
            "type": r.cm_type, "level": r.level, "gorenstein": r.gorenstein, "nearly": r.nearly_gorenstein,
            "hilbert": [hilbert_function(V, n) for n in range(4)]}


def _veronese_check(d, k):
    r = okokok_check(polynomial_ring(d), k)
    return {"hypotheses_met": r.hypotheses_met, "conclusion": r.conclusion_holds,
            "type": r.details.get("veronese_type"), "level": r.details.get("veronese_level"),
            "gorenstein": r.details.get("veronese_gorenstein")}


def _theorem(tid, ring, witnesses=None):
    spec = {"dim": ring.dim, "generators": [list(g) for g in ring.generators], "grading": list(ring.grading.weights)}
    r = check_theorem(TheoremInstance(tid, spec, witnesses or {}))
    return {"status": r.status, "details": {k: r.details[k] for k in ("quotient", "theta_times_quotient_outside")
                                                if k in r.details}}


def _veronese_canonical(k):
    S = polynomial_ring(2)
    return _lists(veronese_module(canonical_module(S), k).generators)


EXAMPLES: tuple[Example, ...] = (
    Example("non-level ring classification",
            {"normal": True, "omega": [[1, 1], [2, 3]], "trace": [[1, 0], [1, 1], [2, 3], [3, 5]],
             "nearly": True, "pseudo": True, "level": False, "type": 2, "gorenstein": False, "quasi": False,
             "natural": False, "semi_standard": False, "a": -1},
            _nonlevel_classification),
    Example("non-level ring: (3,5) outside the radical of the degree-one trace ideal",
            {"degree_one_trace": [[1, 0], [1, 1]], "verdict": "no", "exact": True}, _nonlevel_radical),
    Example("non-level ring: canonical inverse", [[0, -1], [0, 0], [1, 2]], _nonlevel_inverse),
    Example("non-level ring: h-vector refused", {"error": "NotSemiStandard", "witness": [3, 5]}, _nonlevel_h_vector),
    Example("non-level ring: Hilbert function", [1, 2, 4, 6, 7, 9],
            lambda: [hilbert_function(nonlevel_ring(), n) for n in range(6)]),
    Example("numerical <3,4,5>",
            {"frobenius": 2, "pf": [1, 2], "omega": [[-2], [-1]], "trace": [[3], [4], [5]], "gorenstein": False,
             "type": 2, "a": 2},
            lambda: _numerical([3, 4, 5])),
    Example("numerical <2,3>",
            {"frobenius": 1, "pf": [1], "omega": [[-1]], "trace": [[0]], "gorenstein": True, "type": 1, "a": 1},
            lambda: _numerical([2, 3])),
    Example("second Veronese of N^2", [[0, 2], [1, 1], [2, 0]],
            lambda: _lists(veronese_ring(polynomial_ring(2), 2).generators)),
    Example("third Veronese of N^2", [[0, 3], [1, 2], [2, 1], [3, 0]],
            lambda: _lists(veronese_ring(polynomial_ring(2), 3).generators)),
    Example("Veronese submodules of the canonical module of N^2", {2: [[1, 1]], 3: [[1, 2], [2, 1]]},
            lambda: {k: _veronese_canonical(k) for k in (2, 3)}),
    Example("third Veronese of N^2: h-vector and classification",
            {"h": [1, 2], "s": 1, "e": 3, "minimal_multiplicity": True, "type": 2, "level": True,
             "gorenstein": False, "nearly": True, "hilbert": [1, 4, 7, 10]},
            _third_veronese),
    Example("quasi-Gorenstein Veronese: N^2, k=2",
            {"hypotheses_met": True, "conclusion": True, "type": 1, "level": True, "gorenstein": True},
            lambda: _veronese_check(2, 2)),
    Example("quasi-Gorenstein Veronese: N^2, k=3 (negative control)",
            {"hypotheses_met": False, "conclusion": False, "type": 2, "level": True, "gorenstein": False},
            lambda: _veronese_check(2, 3)),
    Example("quasi-Gorenstein Veronese: N^3, k=3",
            {"hypotheses_met": True, "conclusion": True, "type": 1, "level": True, "gorenstein": True},
            lambda: _veronese_check(3, 3)),
    Example("T1 on the non-level ring", {"status": "vacuous", "details": {}}, lambda: _theorem("T1", nonlevel_ring())),
    Example("T1 on N^2", {"status": "verified", "details": {}}, lambda: _theorem("T1", polynomial_ring(2))),
    Example("T5 on N^2 with I = m",
            {"status": "verified", "details": {"quotient": [-1, 1], "theta_times_quotient_outside": [False, True]}},
            lambda: _theorem("T5", polynomial_ring(2), {"ideal": [[1, 0], [0, 1]], "f1": [1, 0], "f2": [0, 1],
                                                        "thetas": [[1, 0], [0, 1]]})),
)


def run_all() -> list[tuple[Example, bool, Any]]:
    return [(ex, *ex.run()) for ex in EXAMPLES]
