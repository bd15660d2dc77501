"""Seeded instance generation, per-instance theorem checks and campaign aggregation.

Theorem identifiers:

* ``T1``  nearly Gorenstein, R_indeg generating an m-primary ideal, dim >= 2:
  pseudo-Gorenstein iff Gorenstein.
* ``T2``  same hypotheses and type 2: level.
* ``T3``  the radical of the ideal generated by the initial-degree part of the
  canonical trace contains m, dim >= 2: pseudo-Gorenstein implies Gorenstein.
* ``T4``  Veronese of a standard graded, nearly and pseudo-Gorenstein ring with
  a in kZ and depth >= 2 is quasi-Gorenstein.
* ``T5``  f1, f2 in I with f2 not in f1*R and a regular pair theta of initial
  degree: theta_i * f2 / f1 is not in R for some i.
* ``T6``  I generated by degree-one trace elements: the k-th Veronese of
  n^(k-1) I lies in the canonical trace of the k-th Veronese ring.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import cached_property
from typing import Any

from .canonical import canonical_module
from .errors import GradingSearchFailed, InputError, TraceGorError
from .invariants import ClassificationReport, classify, h_vector
from .lattice import SimplicialCone, primitive
from .modules import MonomialModule, minimize_generators, trace_module
from .numerical import NumericalSemigroup, numerical_profile
from .results import TheoremInstanceResult
from .ringspec import ring_to_dict, spec_from_dict
from .semigroup import AffineSemigroupRing, Limits, radical_test
from .veronese import okokok_check, veronese_module, veronese_ring

THEOREMS = ("T1", "T2", "T3", "T4", "T5", "T6")
DEFAULT_THEOREMS = ("T1", "T2", "T3", "T5", "T6")

NONLEVEL_GENERATORS = ((1, 0), (1, 1), (2, 3), (3, 5))


def nonlevel_ring(limits: Limits | None = None) -> AffineSemigroupRing:
    return AffineSemigroupRing(NONLEVEL_GENERATORS, (1, 0), limits=limits, label="nonlevel-pseudo-gorenstein")


def derive_seed(seed: int, *parts) -> int:
    """Splittable seeding: a stable 64-bit seed for each (seed, parts) path."""
    key = ":".join(str(p) for p in (seed, *parts)).encode()
    return int.from_bytes(hashlib.sha256(key).digest()[:8], "big")


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


# -- instance families -------------------------------------------------------------


def random_numerical(seed: int, max_multiplicity: int = 6, max_frobenius: int = 30) -> NumericalSemigroup:
    """A random numerical semigroup with multiplicity <= max_multiplicity and Frobenius <= max_frobenius.

    The block ``F+1, ..., F+m`` is always included, which forces both bounds.
    """
    if max_multiplicity < 1 or max_frobenius < -1:
        raise ValueError("bounds must be positive")
    rng = random.Random(seed)
    m = rng.randint(1, max_multiplicity)
    if m == 1:
        return numerical_profile([1])
    top = max(max_frobenius, m - 1)
    pool = list(range(m + 1, top + 1))
    extra = rng.sample(pool, rng.randint(0, min(len(pool), m - 1))) if pool else []
    block = [x for x in range(top + 1, top + m + 1) if x % m]
    return numerical_profile([m, *extra, *block])


def exhaustive_numerical(max_multiplicity: int, max_frobenius: int) -> list[NumericalSemigroup]:
    """Every numerical semigroup with the given bounds, via Kunz coordinates.

    For multiplicity m the Apéry element of residue i is ``k_i * m + i`` with
    ``k_i >= 1``, ``k_i + k_j >= k_{i+j}`` and ``k_i + k_j + 1 >= k_{i+j-m}``.
    """
    out = []
    if max_multiplicity >= 1:
        out.append(numerical_profile([1]))
    for m in range(2, max_multiplicity + 1):
        tops = [(max_frobenius + m - i) // m for i in range(m)]
        if any(tops[i] < 1 for i in range(1, m)):
            continue
        for ks in itertools.product(*(range(1, tops[i] + 1) for i in range(1, m))):
            k = (0,) + ks
            if all(k[a] + k[b] >= (k[a + b] if a + b < m else k[a + b - m] - 1)
                   for a in range(1, m) for b in range(a, m) if a + b != m):
                out.append(numerical_profile([m] + [k[r] * m + r for r in range(1, m)]))
    return out


def balanced_grading(ray: tuple[int, int]) -> tuple[int, int]:
    """The grading taking the same value on (1, 0) and on the primitive ray ``ray``."""
    p, q = ray
    g = math.gcd(q, 1 - p)
    return (q // g, (1 - p) // g)


def random_normal_2d(seed: int, max_slope_coord: int = 6, grading_range: int = 3,
                     balanced_fraction: float = 0.5, limits: Limits | None = None,
                     retries: int = 100) -> AffineSemigroupRing:
    """Normal ring of the cone spanned by (1, 0) and a random (p, q), generated by its Hilbert basis."""
    if max_slope_coord < 1 or grading_range < 1:
        raise ValueError("bounds must be positive")
    rng = random.Random(seed)
    p = rng.randint(1, max_slope_coord)
    q = rng.randint(1, max_slope_coord)
    ray = primitive((p, q))
    hb = SimplicialCone(((1, 0), ray)).hilbert_basis()
    if rng.random() < balanced_fraction:
        w = balanced_grading(ray)
    else:
        for _ in range(retries):
            w = (rng.randint(1, grading_range), rng.randint(-grading_range, grading_range))
            if w[0] * ray[0] + w[1] * ray[1] > 0:
                break
        else:
            raise GradingSearchFailed(f"no positive grading on rays (1,0), {ray} after {retries} attempts")
    return AffineSemigroupRing(hb, w, limits=limits, label=f"cone(1,0;{ray[0]},{ray[1]}) w={w[0]},{w[1]}")


def segment_ring(n: int, limits: Limits | None = None) -> AffineSemigroupRing:
    """Standard graded ring of the lattice segment [0, n]: generators (i, 1)."""
    return AffineSemigroupRing([(i, 1) for i in range(n + 1)], (0, 1), limits=limits, label=f"segment[0,{n}]")


def polytope_ring(points, limits: Limits | None = None, label: str | None = None) -> AffineSemigroupRing:
    """Standard graded ring of a lattice polytope given by all of its lattice points."""
    gens = [tuple(p) + (1,) for p in points]
    d = len(gens[0])
    return AffineSemigroupRing(gens, (0,) * (d - 1) + (1,), limits=limits, label=label)


def polynomial_ring(d: int, limits: Limits | None = None) -> AffineSemigroupRing:
    gens = [tuple(int(i == j) for j in range(d)) for i in range(d)]
    return AffineSemigroupRing(gens, (1,) * d, limits=limits, label=f"N^{d}")


def quasi_gorenstein_veronese_family(limits: Limits | None = None) -> list[tuple[AffineSemigroupRing, int]]:
    """Pinned standard graded Gorenstein rings paired with Veronese indices."""
    fam = []
    for k in (1, 2, 3, 4):
        fam.append((polynomial_ring(2, limits), k))
    for k in (1, 2, 3, 4):
        fam.append((polynomial_ring(3, limits), k))
    for n in (1, 2, 3, 4):
        for k in (1, 2, 3):
            fam.append((segment_ring(n, limits), k))
    tri = [(-1, -1), (0, 0), (1, 0), (0, 1)]
    tri3 = [(x, y) for x in range(-1, 3) for y in range(-1, 3) if x + y <= 1]
    for k in (1, 2):
        fam.append((polytope_ring(tri, limits, "reflexive-triangle"), k))
        fam.append((polytope_ring(tri3, limits, "3-simplex-dilate"), k))
    return fam


# -- theorem instances ---------------------------------------------------------------


@dataclass
class TheoremInstance:
    theorem_id: str
    ring: dict
    witnesses: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"theorem": self.theorem_id, "ring": self.ring, "witnesses": self.witnesses}

    @classmethod
    def from_dict(cls, obj: dict) -> "TheoremInstance":
        if "instance" in obj:
            obj = obj["instance"]
        if not isinstance(obj, dict) or "theorem" not in obj or "ring" not in obj:
            raise InputError("a theorem instance needs 'theorem' and 'ring' fields")
        tid = obj["theorem"]
        if tid not in THEOREMS:
            raise InputError(f"unknown theorem id {tid!r}; expected one of {', '.join(THEOREMS)}")
        return cls(tid, obj["ring"], obj.get("witnesses") or {})

    def build_ring(self, limits: Limits | None = None) -> AffineSemigroupRing:
        return spec_from_dict(self.ring).build(limits)


class _RingFacts:
    """Lazily computed invariants shared by the theorem checks of one ring."""

    def __init__(self, S: AffineSemigroupRing):
        self.S = S

    @cached_property
    def normal(self) -> bool:
        return self.S.local_cone is not None and self.S.is_normal()

    @cached_property
    def omega(self) -> MonomialModule:
        return canonical_module(self.S)

    @cached_property
    def trace(self) -> MonomialModule:
        return trace_module(self.omega)

    @cached_property
    def report(self) -> ClassificationReport:
        return classify(self.S, self.omega)


def _vecs(xs) -> list[tuple[int, ...]]:
    return [tuple(x) for x in xs]


def _summary(r: ClassificationReport) -> dict:
    return {"gorenstein": r.gorenstein, "pseudo_gorenstein": r.pseudo_gorenstein, "level": r.level,
            "nearly_gorenstein": r.nearly_gorenstein, "natural_condition": r.natural_condition,
            "semi_standard": r.semi_standard, "cm_type": r.cm_type, "a_invariant": r.a_invariant}


def _check_t1(F: _RingFacts, inst: TheoremInstance) -> TheoremInstanceResult:
    r = F.report
    hyps = {"normal_dim_ge_2": F.normal and F.S.dim >= 2, "nearly_gorenstein": r.nearly_gorenstein,
            "initial_degree_m_primary": r.semi_standard}
    details = _summary(r)
    if r.pseudo_gorenstein and not r.gorenstein and not all(hyps.values()):
        details["note"] = "pseudo-Gorenstein but not Gorenstein: a failed hypothesis is necessary"
    return TheoremInstanceResult("T1", hyps, r.pseudo_gorenstein == r.gorenstein, details)


def _check_t2(F: _RingFacts, inst: TheoremInstance) -> TheoremInstanceResult:
    r = F.report
    hyps = {"normal_dim_ge_2": F.normal and F.S.dim >= 2, "nearly_gorenstein": r.nearly_gorenstein,
            "initial_degree_m_primary": r.semi_standard, "type_2": r.cm_type == 2}
    return TheoremInstanceResult("T2", hyps, r.level, _summary(r))


def _check_t3(F: _RingFacts, inst: TheoremInstance) -> TheoremInstanceResult:
    r = F.report
    hyps = {"normal_dim_ge_2": F.normal and F.S.dim >= 2, "natural_condition": r.natural_condition}
    return TheoremInstanceResult("T3", hyps, (not r.pseudo_gorenstein) or r.gorenstein, _summary(r))


def _check_t4(F: _RingFacts, inst: TheoremInstance) -> TheoremInstanceResult:
    k = inst.witnesses.get("k")
    if not isinstance(k, int) or k < 1:
        raise InputError("T4 needs a witness k >= 1")
    return okokok_check(F.S, k)


def _check_t5(F: _RingFacts, inst: TheoremInstance) -> TheoremInstanceResult:
    S, w = F.S, inst.witnesses
    try:
        ideal = _vecs(w["ideal"])
        f1, f2 = tuple(w["f1"]), tuple(w["f2"])
        thetas = _vecs(w["thetas"])
    except (KeyError, TypeError) as e:
        raise InputError(f"T5 needs witnesses ideal, f1, f2, thetas ({e})") from None
    if len(thetas) != 2 or not ideal:
        raise InputError("T5 needs a nonempty ideal and exactly two thetas")
    if not all(S.membership(g) for g in ideal):
        raise InputError("T5 ideal generators must lie in the ring")
    I = minimize_generators(S, ideal)
    if not (I.contains(f1) and I.contains(f2)):
        raise InputError("T5 witnesses f1, f2 must lie in the ideal")
    if any(not S.membership(t) or S.degree(t) != S.indeg for t in thetas):
        raise InputError("T5 thetas must be ring elements of initial degree")
    quotient = tuple(a - b for a, b in zip(f2, f1))
    regular = None
    if F.normal and S.dim == 2:
        # two elements of a 2-dimensional Cohen-Macaulay ring are regular iff they are a system of parameters
        regular = radical_test(S, thetas).m_primary
    elif S.dim < 2:
        regular = False
    hyps = {"f2_not_in_f1_R": not S.membership(quotient), "thetas_regular_sequence": regular}
    outside = [not S.membership(tuple(a + b for a, b in zip(t, quotient))) for t in thetas]
    details = {"quotient": list(quotient), "theta_times_quotient_outside": outside}
    return TheoremInstanceResult("T5", hyps, any(outside), details)


def _check_t6(F: _RingFacts, inst: TheoremInstance) -> TheoremInstanceResult:
    S, w = F.S, inst.witnesses
    k = w.get("k")
    if not isinstance(k, int) or k < 1:
        raise InputError("T6 needs a witness k >= 1")
    ideal = _vecs(w.get("ideal", []))
    if any(not S.membership(g) or S.degree(g) != 1 for g in ideal):
        raise InputError("T6 ideal generators must be ring elements of degree one")
    ones = S.slice(1) if S.indeg == 1 else []
    hyps = {"degree_one_nonzero_divisor": bool(ones), "ideal_nonempty": bool(ideal),
            "ideal_in_trace": all(F.trace.contains(g) for g in ideal) if ideal else False,
            "canonical_constructible": F.normal or S.dim == 1}
    details: dict[str, Any] = {"k": k}
    if not all(hyps.values()):
        return TheoremInstanceResult("T6", hyps, None, details)
    # n^(k-1) I is generated in degree k, so its Veronese is generated by that degree part
    pts = set(ideal)
    for _ in range(k - 1):
        pts = {tuple(a + b for a, b in zip(p, x)) for p in pts for x in ones}
    J = minimize_generators(S, pts)
    V = veronese_ring(S, k)
    Jk = veronese_module(J, k, V)
    trace_v = trace_module(canonical_module(V))
    missing = [list(g) for g in Jk.generators if not trace_v.contains(g)]
    details.update({"veronese_generators": len(Jk), "missing": missing,
                    "veronese_trace": [list(g) for g in trace_v.generators]})
    return TheoremInstanceResult("T6", hyps, not missing, details)


_CHECKS = {"T1": _check_t1, "T2": _check_t2, "T3": _check_t3, "T4": _check_t4, "T5": _check_t5, "T6": _check_t6}


def check_theorem(inst: TheoremInstance, limits: Limits | None = None,
                  _facts: _RingFacts | None = None) -> TheoremInstanceResult:
    """Evaluate the hypotheses and conclusion of one theorem on one instance."""
    if inst.theorem_id not in _CHECKS:
        raise InputError(f"unknown theorem id {inst.theorem_id!r}")
    F = _facts if _facts is not None else _RingFacts(inst.build_ring(limits))
    res = _CHECKS[inst.theorem_id](F, inst)
    if res.status == "counterexample":
        res.counterexample = inst.to_dict()
    return res


# -- witness sampling ----------------------------------------------------------------


def _sample_t5(F: _RingFacts, rng: random.Random) -> dict:
    S = F.S
    d0, top = S.indeg, S.maxgen_degree
    pool = [p for t in range(d0, d0 + top + 1) for p in S.slice(t)]
    ideal = rng.sample(pool, min(len(pool), rng.randint(1, 3)))
    I = minimize_generators(S, ideal)
    f1 = rng.choice(I.generators)
    g = rng.choice(I.generators)
    small = [p for t in range(0, top + 1) for p in S.slice(t)]
    f2 = tuple(a + b for a, b in zip(g, rng.choice(small)))
    base = S.slice(d0)
    rays = [r for r in S.lattice_rays if S.degree(r) == d0] if S.local_cone is not None else []
    if len(rays) == 2 and rng.random() < 0.5:
        thetas = rays
    elif len(base) >= 2:
        thetas = rng.sample(base, 2)
    else:
        thetas = [base[0], base[0]]
    return {"ideal": [list(v) for v in I.generators], "f1": list(f1), "f2": list(f2),
            "thetas": [list(t) for t in thetas]}


def _sample_t6(F: _RingFacts, rng: random.Random) -> dict:
    S = F.S
    k = rng.choice((2, 3))
    ones = S.slice(1) if S.indeg == 1 else []
    if not ones:
        return {"k": k, "ideal": []}
    in_trace = [p for p in ones if F.trace.contains(p)]
    src = in_trace if in_trace and rng.random() < 0.75 else ones
    ideal = rng.sample(src, rng.randint(1, min(3, len(src))))
    return {"k": k, "ideal": [list(v) for v in sorted(ideal)]}


def sample_instance(theorem_id: str, F: _RingFacts, rng: random.Random) -> TheoremInstance:
    spec = ring_to_dict(F.S)
    if theorem_id == "T5":
        return TheoremInstance("T5", spec, _sample_t5(F, rng))
    if theorem_id == "T6":
        return TheoremInstance("T6", spec, _sample_t6(F, rng))
    if theorem_id == "T4":
        return TheoremInstance("T4", spec, {"k": rng.choice((1, 2, 3))})
    return TheoremInstance(theorem_id, spec, {})


# -- campaigns -----------------------------------------------------------------------

FAMILIES = ("normal2d", "numerical", "veronese")


@dataclass(frozen=True)
class CampaignConfig:
    seed: int = 0
    count: int = 500
    theorems: tuple[str, ...] = DEFAULT_THEOREMS
    family: str = "normal2d"
    max_slope_coord: int = 6
    grading_range: int = 3
    balanced_fraction: float = 0.5
    max_multiplicity: int = 6
    max_frobenius: int = 30
    pin_nonlevel_ring: bool = True
    degree_cap: int = 512
    radical_cap: int = 64
    inverse_window: int | None = None
    veronese_window: int | None = None
    workers: int = 1

    def __post_init__(self):
        object.__setattr__(self, "theorems", tuple(self.theorems))
        bad = [t for t in self.theorems if t not in THEOREMS]
        if bad:
            raise InputError(f"unknown theorem id(s): {', '.join(bad)}")
        if self.family not in FAMILIES:
            raise InputError(f"unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}")
        if self.count < 0:
            raise InputError("count must be nonnegative")

    @property
    def limits(self) -> Limits:
        return Limits(degree_cap=self.degree_cap, radical_cap=self.radical_cap,
                      inverse_window=self.inverse_window, veronese_window=self.veronese_window)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["theorems"] = list(self.theorems)
        del d["workers"]
        return d


COUNT_KEYS = ("hypotheses_met", "vacuous", "conclusion_verified", "counterexamples", "unknown", "errors")


@dataclass
class CampaignReport:
    config: CampaignConfig
    counts: dict[str, dict[str, int]]
    invariants: dict[str, int]
    counterexamples: list[dict]
    errors: list[dict]
    instance_digests: list[str]
    runtime_seconds: float = 0.0

    @property
    def total_counterexamples(self) -> int:
        return sum(c["counterexamples"] for c in self.counts.values()) + self.invariants.get("violations", 0)

    def to_dict(self, include_runtime: bool = False) -> dict:
        d = {"config": self.config.to_dict(), "counts": self.counts, "invariants": self.invariants,
             "counterexamples": self.counterexamples, "errors": self.errors,
             "instance_digests": self.instance_digests,
             "digest": hashlib.sha256(canonical_json(self.instance_digests).encode()).hexdigest()}
        if include_runtime:
            d["runtime_seconds"] = self.runtime_seconds
        return d

    def to_json(self, include_runtime: bool = False) -> str:
        return json.dumps(self.to_dict(include_runtime), sort_keys=True, indent=2)


def _instance_ring(cfg: CampaignConfig, i: int):
    lim = cfg.limits
    if cfg.family == "veronese":
        fam = quasi_gorenstein_veronese_family(lim)
        S, k = fam[i % len(fam)]
        return S, k
    if cfg.family == "numerical":
        N = random_numerical(derive_seed(cfg.seed, i, "ring"), cfg.max_multiplicity, cfg.max_frobenius)
        return AffineSemigroupRing([(g,) for g in N.generators], (1,), limits=lim, label=N.label()), None
    if i == 0 and cfg.pin_nonlevel_ring:
        return nonlevel_ring(lim), None
    return random_normal_2d(derive_seed(cfg.seed, i, "ring"), cfg.max_slope_coord, cfg.grading_range,
                            cfg.balanced_fraction, lim), None


def _invariant_checks(F: _RingFacts) -> dict[str, Any]:
    """Implication lattice and h-vector socle checks on a classified ring."""
    r = F.report
    out: dict[str, Any] = {"classified": 1, "violations": list(r.implication_violations())}
    out["h_vector_checked"] = 0
    if F.normal and r.semi_standard and F.S.indeg == 1:
        h = h_vector(F.S)
        out["h_vector_checked"] = 1
        if h.h[-1] != r.min_degree_dim:
            out["violations"].append(f"h_s={h.h[-1]} differs from min_degree_dim={r.min_degree_dim}")
        if h.h[0] != 1 or any(x < 0 for x in h.h):
            out["violations"].append(f"h-vector {list(h.h)} is not a Cohen-Macaulay h-vector")
    return out


def evaluate_instance(cfg: CampaignConfig, i: int) -> dict:
    """All selected theorems on instance ``i``; deterministic in (cfg, i) alone."""
    rec: dict[str, Any] = {"index": i, "results": {}, "invariants": None, "ring": None}
    try:
        S, k = _instance_ring(cfg, i)
    except TraceGorError as e:
        rec["ring_error"] = f"{type(e).__name__}: {e}"
        return rec
    rec["ring"] = ring_to_dict(S)
    F = _RingFacts(S)
    for tid in cfg.theorems:
        rng = random.Random(derive_seed(cfg.seed, i, tid))
        try:
            inst = sample_instance(tid, F, rng)
            if tid == "T4" and k is not None:
                inst.witnesses["k"] = k
            res = check_theorem(inst, _facts=F)
            rec["results"][tid] = {"status": res.status, "instance": inst.to_dict(),
                                   "counterexample": res.counterexample}
        except TraceGorError as e:
            rec["results"][tid] = {"status": "error", "error": f"{type(e).__name__}: {e}"}
    if cfg.theorems and (F.normal or S.dim == 1):
        try:
            rec["invariants"] = _invariant_checks(F)
        except TraceGorError as e:
            rec["invariants"] = {"error": f"{type(e).__name__}: {e}"}
    return rec


def _digest(rec: dict) -> str:
    slim = {"ring": rec["ring"], "status": {t: r["status"] for t, r in rec["results"].items()}}
    return hashlib.sha256(canonical_json(slim).encode()).hexdigest()[:16]


def run_campaign(cfg: CampaignConfig) -> CampaignReport:
    t0 = time.perf_counter()
    idx = range(cfg.count) if cfg.theorems else range(0)
    if cfg.workers > 1 and len(idx) > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as ex:
            recs = list(ex.map(evaluate_instance, [cfg] * len(idx), idx, chunksize=8))
    else:
        recs = [evaluate_instance(cfg, i) for i in idx]
    recs.sort(key=lambda r: r["index"])
    counts = {t: dict.fromkeys(COUNT_KEYS, 0) for t in cfg.theorems}
    inv = {"classified": 0, "h_vector_checked": 0, "violations": 0, "errors": 0}
    cex, errs, digests = [], [], []
    for rec in recs:
        i = rec["index"]
        if "ring_error" in rec:
            for t in cfg.theorems:
                counts[t]["errors"] += 1
            errs.append({"index": i, "error": rec["ring_error"]})
            digests.append(hashlib.sha256(rec["ring_error"].encode()).hexdigest()[:16])
            continue
        for t, r in rec["results"].items():
            c = counts[t]
            st = r["status"]
            if st == "verified":
                c["hypotheses_met"] += 1
                c["conclusion_verified"] += 1
            elif st == "counterexample":
                c["hypotheses_met"] += 1
                c["counterexamples"] += 1
                cex.append({"index": i, "theorem": t, "instance": r["counterexample"]})
            elif st == "vacuous":
                c["vacuous"] += 1
            elif st == "unknown":
                c["unknown"] += 1
            else:
                c["errors"] += 1
                errs.append({"index": i, "theorem": t, "error": r["error"]})
        iv = rec["invariants"]
        if iv is not None:
            if "error" in iv:
                inv["errors"] += 1
                errs.append({"index": i, "theorem": "invariants", "error": iv["error"]})
            else:
                inv["classified"] += iv["classified"]
                inv["h_vector_checked"] += iv["h_vector_checked"]
                for v in iv["violations"]:
                    inv["violations"] += 1
                    cex.append({"index": i, "theorem": "invariants", "violation": v, "ring": rec["ring"]})
        digests.append(_digest(rec))
    return CampaignReport(cfg, counts, inv, cex, errs, digests, time.perf_counter() - t0)
