"""Per-instance verdicts for theorem checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

STATUSES = ("verified", "vacuous", "unknown", "counterexample", "error")


def tri_and(values) -> bool | None:
    """Three-valued conjunction: any False wins, then any None."""
    values = list(values)
    if any(v is False for v in values):
        return False
    if any(v is None for v in values):
        return None
    return True


@dataclass
class TheoremInstanceResult:
    theorem_id: str
    hypotheses: dict[str, bool | None]
    conclusion_holds: bool | None
    details: dict[str, Any] = field(default_factory=dict)
    counterexample: dict | None = None
    error: str | None = None

    @property
    def hypotheses_met(self) -> bool | None:
        return tri_and(self.hypotheses.values())

    @property
    def status(self) -> str:
        if self.error is not None:
            return "error"
        met = self.hypotheses_met
        if met is False:
            return "vacuous"
        if met is None or self.conclusion_holds is None:
            return "unknown"
        return "verified" if self.conclusion_holds else "counterexample"

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem_id,
            "status": self.status,
            "hypotheses_met": self.hypotheses_met,
            "hypotheses": dict(self.hypotheses),
            "conclusion_holds": self.conclusion_holds,
            "details": self.details,
            "counterexample": self.counterexample,
            "error": self.error,
        }
