"""Shared report records for verification runs and hunts."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Verdict:
    """Outcome of checking one claim on one graph.

    `conclusion_holds` is present exactly when the hypothesis gate was
    met; `witness` carries a serialized family when a constructive
    route produced one.
    """

    graph_id: str
    claim: str
    k: int | None
    hypothesis_met: bool
    conclusion_holds: bool | None = None
    witness: dict | None = field(default=None, compare=False)
    note: str = ""

    def to_json(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "claim": self.claim,
            "k": self.k,
            "hypothesis_met": self.hypothesis_met,
            "conclusion_holds": self.conclusion_holds,
            "witness": self.witness,
            "note": self.note,
        }


@dataclass(frozen=True)
class HuntReport:
    """Result of a randomized counterexample hunt for one conjecture."""

    target: str
    model: str
    k: int
    instances: int
    seed_start: int
    seed_end: int
    violations: tuple[str, ...]
    near_misses: tuple[str, ...]
    skipped: int = 0

    def to_json(self) -> dict:
        return {
            "target": self.target,
            "model": self.model,
            "k": self.k,
            "instances": self.instances,
            "seed_start": self.seed_start,
            "seed_end": self.seed_end,
            "violations": list(self.violations),
            "near_misses": list(self.near_misses),
            "skipped": self.skipped,
        }
