"""Per-theorem outcome records produced by corpus scans."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum


class Status(str, Enum):
    VERIFIED_ON_CORPUS = "VERIFIED_ON_CORPUS"
    VIOLATION_FOUND = "VIOLATION_FOUND"
    NOT_APPLICABLE = "NOT_APPLICABLE"


@dataclass
class TheoremCheckResult:
    """Aggregate of one check over a corpus.

    ``scanned`` counts every graph offered; ``applicable`` those the
    statement's hypotheses cover; ``skipped`` lists graph6 strings whose
    solvers ran out of budget (never counted as pass or violation).
    """

    theorem_id: str
    scanned: int = 0
    applicable: int = 0
    not_applicable: int = 0
    violations: list[dict] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)
    status: Status = Status.NOT_APPLICABLE
    last_index: int = -1
    details: dict = field(default_factory=dict)

    def add_violation(self, graph6: str, values: dict) -> None:
        self.violations.append({"graph6": graph6, "values": values})

    def finish(self) -> TheoremCheckResult:
        if self.violations:
            self.status = Status.VIOLATION_FOUND
        elif self.applicable:
            self.status = Status.VERIFIED_ON_CORPUS
        else:
            self.status = Status.NOT_APPLICABLE
        return self

    def as_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "status": self.status.value,
            "scanned": self.scanned,
            "applicable": self.applicable,
            "not_applicable": self.not_applicable,
            "violations": self.violations,
            "skipped": self.skipped,
            "last_index": self.last_index,
        }
