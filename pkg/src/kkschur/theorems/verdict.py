"""Verdicts and search bounds shared by every statement check."""
from __future__ import annotations

import json
from dataclasses import dataclass, field

HARD_MAX_K = 4
HARD_MAX_SIZE = 8
HARD_MAX_TOTAL = 3


def _jsonable(x):
    if isinstance(x, tuple):
        return [_jsonable(y) for y in x]
    if isinstance(x, list):
        return [_jsonable(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if hasattr(x, "to_json"):
        return x.to_json()
    if isinstance(x, int) and abs(x) > 2 ** 53:
        return str(x)
    return x


@dataclass
class Verdict:
    statement: str
    k: int | None
    checked: int
    counterexamples: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        cex = [{"inputs": _jsonable(i), "expected": _jsonable(e), "got": _jsonable(g)}
               for i, e, g in self.counterexamples]
        cex.sort(key=lambda d: json.dumps(d, sort_keys=True))
        return {"statement": self.statement, "k": self.k, "checked": self.checked,
                "counterexamples": cex, "ms": round(self.elapsed * 1000)}


@dataclass(frozen=True)
class Bounds:
    """Search limits: ``max_size`` bounds |lambda|, ``max_total`` bounds sum a_i."""

    max_size: int = 6
    max_total: int = 2
    max_mult: int = 2
    override: bool = False

    def __post_init__(self):
        if self.override:
            return
        if self.max_size > HARD_MAX_SIZE:
            raise ValueError(f"max_size {self.max_size} exceeds {HARD_MAX_SIZE} (set override to lift the cap)")
        if self.max_total > HARD_MAX_TOTAL:
            raise ValueError(f"max_total {self.max_total} exceeds {HARD_MAX_TOTAL} (set override to lift the cap)")

    @staticmethod
    def check_level(k: int, override: bool = False):
        if k > HARD_MAX_K and not override:
            raise ValueError(f"k={k} exceeds {HARD_MAX_K} (set override to lift the cap)")

    def to_json(self) -> dict:
        return {"max_size": self.max_size, "max_total": self.max_total, "max_mult": self.max_mult}
