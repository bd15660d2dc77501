"""Gorenstein-type classification and Hilbert series analytics."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .canonical import a_invariant, canonical_module, min_degree_dim
from .errors import NotSemiStandard, StabilizationFailed
from .lattice import Vector
from .modules import MonomialModule, trace_module
from .semigroup import AffineSemigroupRing, RadicalVerdict, Verdict, radical_test


@dataclass(frozen=True)
class ClassificationReport:
    gorenstein: bool
    quasi_gorenstein: bool
    pseudo_gorenstein: bool
    level: bool
    nearly_gorenstein: bool
    natural_condition: bool | None
    semi_standard: bool | None
    cm_type: int
    a_invariant: int
    min_degree_dim: int
    omega_generators: tuple[Vector, ...]
    omega_generator_degrees: tuple[int, ...]
    trace_generators: tuple[Vector, ...]
    indeg_maximal: int
    natural_degree: int
    """Degree whose part of the trace (resp. of the ring) feeds natural_condition (resp. semi_standard)."""
    canonical_verified: bool
    normal: bool | None

    def to_dict(self) -> dict:
        d = asdict(self)
        for key in ("omega_generators", "trace_generators"):
            d[key] = [list(v) for v in d[key]]
        d["omega_generator_degrees"] = list(d["omega_generator_degrees"])
        return d

    def implication_violations(self) -> list[str]:
        bad = []
        if self.gorenstein:
            for name in ("quasi_gorenstein", "pseudo_gorenstein", "level", "nearly_gorenstein"):
                if not getattr(self, name):
                    bad.append(f"gorenstein but not {name}")
        if self.gorenstein != (self.cm_type == 1):
            bad.append("gorenstein disagrees with type 1")
        if self.pseudo_gorenstein and self.level and not self.gorenstein:
            bad.append("pseudo-Gorenstein and level but not Gorenstein")
        return bad


def _radical_flag(S: AffineSemigroupRing, gens) -> tuple[bool | None, RadicalVerdict | None]:
    if not gens:
        return False, None
    verdict = radical_test(S, gens)
    return verdict.m_primary, verdict


def classify(S: AffineSemigroupRing, omega: MonomialModule | None = None) -> ClassificationReport:
    if omega is None:
        omega = canonical_module(S)
    trace = trace_module(omega)
    nearly = all(trace.contains(g) for g in S.minimal_generators)
    indeg = S.indeg
    ring_part = S.slice(indeg)
    trace_part = [p for p in ring_part if trace.contains(p)]
    natural, _ = _radical_flag(S, trace_part)
    semi, _ = _radical_flag(S, ring_part)
    degs = tuple(omega.degrees)
    return ClassificationReport(
        gorenstein=len(omega.generators) == 1,
        quasi_gorenstein=trace.is_unit,
        pseudo_gorenstein=min_degree_dim(S, omega) == 1,
        level=len(set(degs)) == 1,
        nearly_gorenstein=nearly,
        natural_condition=natural,
        semi_standard=semi,
        cm_type=len(omega.generators),
        a_invariant=a_invariant(S, omega),
        min_degree_dim=min_degree_dim(S, omega),
        omega_generators=omega.generators,
        omega_generator_degrees=degs,
        trace_generators=trace.generators,
        indeg_maximal=indeg,
        natural_degree=indeg,
        canonical_verified=omega.verified,
        normal=S.is_normal() if S.local_cone is not None else None,
    )


def hilbert_function(S: AffineSemigroupRing, n: int) -> int:
    if n < 0:
        return 0
    return len(S.slice(n))


@dataclass(frozen=True)
class HVectorReport:
    h: tuple[int, ...]
    socle_degree: int
    krull_dim: int
    multiplicity: int
    minimal_multiplicity: bool

    def to_dict(self) -> dict:
        d = asdict(self)
        d["h"] = list(self.h)
        return d


def semi_standard_witness(S: AffineSemigroupRing) -> Vector | None:
    """A minimal generator outside the radical of the ideal generated by degree-one elements."""
    ones = S.slice(1) if S.indeg == 1 else []
    if not ones:
        return S.minimal_generators[0]
    verdict = radical_test(S, ones)
    for e in verdict.generator_entries:
        if e.verdict is not Verdict.YES:
            return e.target
    return None


def h_vector(S: AffineSemigroupRing) -> HVectorReport:
    """Numerator of the Hilbert series over (1 - t)^dim for semi-standard graded rings."""
    witness = semi_standard_witness(S)
    if witness is not None:
        raise NotSemiStandard(f"degree-one elements do not generate an m-primary ideal; {list(witness)} is "
                              "not in its radical", witness=witness)
    d = S.dim
    N = 2 * (d + 8)
    while True:
        if N > S.limits.degree_cap:
            raise StabilizationFailed(f"h-vector did not stabilise below degree {S.limits.degree_cap}")
        coeffs = [hilbert_function(S, n) for n in range(N + 1)]
        for _ in range(d):
            coeffs = [coeffs[0]] + [coeffs[i] - coeffs[i - 1] for i in range(1, len(coeffs))]
        nz = [i for i, c in enumerate(coeffs) if c != 0]
        s = nz[-1] if nz else 0
        if N - s >= d + s + 8:
            break
        N *= 2
    h = tuple(coeffs[: s + 1])
    return HVectorReport(h=h, socle_degree=s, krull_dim=d, multiplicity=sum(h), minimal_multiplicity=s <= 1)
