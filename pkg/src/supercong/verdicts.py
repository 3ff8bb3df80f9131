"""Outcome types shared by the checkers: verdict records and control-flow errors."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum


class Status(str, Enum):
    HOLDS = "Holds"
    FAILS = "Fails"
    NOT_APPLICABLE = "NotApplicable"
    ANOMALY = "Anomaly"

    def __str__(self):
        return self.value


class NotApplicable(Exception):
    """Hypothesis unmet (congruence class, missing optional representation, p | m)."""


class Anomaly(Exception):
    """Hypothesis inconsistency: missing/ambiguous required representation,
    non-integral exponent, zero coordinate under odd-part normalization,
    branch condition matching no case or several."""


@dataclass
class Verdict:
    id: str
    p: int
    params: dict = field(default_factory=dict)
    status: Status = Status.HOLDS
    branch: str = ""
    lhs: int | None = None
    rhs: int | None = None
    modulus: int | None = None
    diagnostics: str = ""

    def sort_key(self):
        return (self.p, self.id, tuple(sorted(self.params.items())))
