"""Structured verdicts for theorem instances."""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field
from typing import Any


class Verdict(enum.Enum):
    HOLDS = "Holds"
    VIOLATED = "Violated"
    INCONCLUSIVE = "Inconclusive"


def _plain(x):
    if isinstance(x, float):
        if math.isinf(x) or math.isnan(x):
            return str(x)
        return x
    if isinstance(x, enum.Enum):
        return x.value
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if hasattr(x, "to_json"):
        return _plain(x.to_json())
    if hasattr(x, "tolist"):
        return _plain(x.tolist())
    return x


@dataclass
class TheoremReport:
    theorem: str
    params: dict
    verdict: Verdict = Verdict.HOLDS
    witnesses: dict = field(default_factory=dict)
    min_margin: float = math.inf
    notes: list = field(default_factory=list)

    def observe(self, margin: float):
        self.min_margin = min(self.min_margin, float(margin))

    def fail(self, note: str, **witness: Any):
        self.verdict = Verdict.VIOLATED
        self.notes.append(note)
        self.witnesses.update(witness)

    def inconclusive(self, note: str):
        if self.verdict is Verdict.HOLDS:
            self.verdict = Verdict.INCONCLUSIVE
        self.notes.append(note)

    @property
    def ok(self) -> bool:
        return self.verdict is not Verdict.VIOLATED

    def to_json(self) -> dict:
        return _plain({"theorem": self.theorem, "params": self.params,
                       "verdict": self.verdict, "witnesses": self.witnesses,
                       "min_margin": self.min_margin, "notes": self.notes})

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)
