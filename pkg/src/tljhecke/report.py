"""Machine-readable verification reports shared by the verify suites."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ReportItem:
    """One checked relation; witness holds the first offending entry, if any."""

    relation: str
    passed: bool
    witness: tuple | None = None

    def to_json(self) -> dict:
        return {"relation": self.relation, "pass": self.passed,
                "witness": list(self.witness) if self.witness is not None else None}


@dataclass(frozen=True)
class VerifyReport:
    description: str
    items: tuple[ReportItem, ...]
    notes: tuple[str, ...] = ()

    @property
    def all_pass(self) -> bool:
        return all(it.passed for it in self.items)

    def to_json(self) -> dict:
        return {
            "description": self.description,
            "all_pass": self.all_pass,
            "relations": [it.to_json() for it in self.items],
            "notes": list(self.notes),
        }

    def __str__(self):
        lines = [self.description]
        for it in self.items:
            mark = "pass" if it.passed else "FAIL"
            w = f"  witness={it.witness}" if (it.witness is not None and not it.passed) else ""
            lines.append(f"  [{mark}] {it.relation}{w}")
        for n in self.notes:
            lines.append(f"  note: {n}")
        return "\n".join(lines)
