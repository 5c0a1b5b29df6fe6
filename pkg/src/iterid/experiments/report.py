"""Experiment reports and their JSON form."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

SCHEMA_VERSION = 1


@dataclass
class ExperimentReport:
    name: str
    params: dict
    seed: int
    passed: bool
    evidence: dict = field(default_factory=dict)
    duration_ms: int | None = None

    def to_dict(self) -> dict:
        return {"schema_version": SCHEMA_VERSION, "name": self.name, "params": self.params,
                "seed": self.seed, "passed": self.passed, "evidence": self.evidence,
                "duration_ms": self.duration_ms}

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)
