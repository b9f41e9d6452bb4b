"""Per-stage records collected while the pipeline runs."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field


@dataclass(frozen=True)
class StageRecord:
    stage: str
    info: dict


@dataclass
class Trace:
    records: list[StageRecord] = field(default_factory=list)

    def record(self, stage: str, **info) -> None:
        self.records.append(StageRecord(stage, info))

    def of(self, stage: str) -> list[dict]:
        return [r.info for r in self.records if r.stage == stage]

    def max_colors(self, stage: str) -> int:
        return max((info["colors"] for info in self.of(stage)), default=0)

    def counts(self) -> Counter:
        return Counter(r.stage for r in self.records)
