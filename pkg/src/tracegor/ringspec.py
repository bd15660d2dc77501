"""JSON ring specifications."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import DimensionMismatch, EmptyGenerators, SpecError
from .semigroup import AffineSemigroupRing, Limits

_FIELDS = {"dim", "generators", "grading", "canonical_generators", "label"}
_NUMERICAL_FIELDS = {"numerical", "label", "canonical_generators"}


@dataclass(frozen=True)
class RingSpec:
    dim: int
    generators: tuple[tuple[int, ...], ...]
    grading: tuple[int, ...]
    canonical_generators: tuple[tuple[int, ...], ...] | None = None
    label: str | None = None
    numerical: tuple[int, ...] | None = None

    def build(self, limits: Limits | None = None) -> AffineSemigroupRing:
        return AffineSemigroupRing(self.generators, self.grading, limits=limits, label=self.label)

    def to_dict(self) -> dict:
        if self.numerical is not None:
            d: dict = {"numerical": list(self.numerical)}
        else:
            d = {"dim": self.dim, "generators": [list(g) for g in self.generators], "grading": list(self.grading)}
        if self.canonical_generators is not None:
            d["canonical_generators"] = [list(g) for g in self.canonical_generators]
        if self.label is not None:
            d["label"] = self.label
        return d


def _int_vector(x, what) -> tuple[int, ...]:
    if not isinstance(x, list) or not all(isinstance(a, int) and not isinstance(a, bool) for a in x):
        raise SpecError(f"{what} must be a list of integers, got {json.dumps(x)}")
    return tuple(x)


def _vectors(x, what) -> tuple[tuple[int, ...], ...]:
    if not isinstance(x, list):
        raise SpecError(f"{what} must be a list of integer vectors")
    return tuple(_int_vector(v, f"entry of {what}") for v in x)


def spec_from_dict(obj) -> RingSpec:
    if not isinstance(obj, dict):
        raise SpecError("a ring spec must be a JSON object")
    label = obj.get("label")
    if label is not None and not isinstance(label, str):
        raise SpecError("label must be a string")
    canon = obj.get("canonical_generators")
    canon = _vectors(canon, "canonical_generators") if canon is not None else None
    if "numerical" in obj:
        unknown = set(obj) - _NUMERICAL_FIELDS
        if unknown:
            raise SpecError(f"unknown field(s) next to 'numerical': {sorted(unknown)}")
        gens = _int_vector(obj["numerical"], "numerical")
        if not gens:
            raise EmptyGenerators("a numerical semigroup needs at least one generator")
        if any(g <= 0 for g in gens):
            raise SpecError("numerical generators must be positive")
        return RingSpec(1, tuple((g,) for g in gens), (1,), canon, label or "<" + ",".join(map(str, gens)) + ">",
                        numerical=gens)
    unknown = set(obj) - _FIELDS
    if unknown:
        raise SpecError(f"unknown field(s): {sorted(unknown)}")
    for key in ("dim", "generators"):
        if key not in obj:
            raise SpecError(f"missing field '{key}'")
    dim = obj["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim <= 0:
        raise SpecError("dim must be a positive integer")
    gens = _vectors(obj["generators"], "generators")
    if not gens:
        raise EmptyGenerators("a semigroup ring needs at least one generator")
    if "grading" not in obj:
        raise SpecError("missing field 'grading'")
    grading = _int_vector(obj["grading"], "grading")
    for g in gens + (grading,) + (canon or ()):
        if len(g) != dim:
            raise DimensionMismatch(f"vector {list(g)} does not have length dim={dim}")
    return RingSpec(dim, gens, grading, canon, label)


def load_ring_spec(text: str) -> RingSpec:
    """Parse a ring spec; syntax errors carry the line and column of the fault."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise SpecError(f"invalid JSON: {e.msg}", line=e.lineno, column=e.colno) from None
    return spec_from_dict(obj)


def ring_to_dict(S: AffineSemigroupRing, canonical=None) -> dict:
    """Ring spec of a user-level ring (scale-one grading)."""
    d: dict = {"dim": S.dim, "generators": [list(g) for g in S.generators], "grading": list(S.grading.weights)}
    if canonical is not None:
        d["canonical_generators"] = [list(g) for g in canonical]
    if S.label:
        d["label"] = S.label
    return d
