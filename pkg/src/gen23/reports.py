"""Shared report containers: claim verdicts and labelled condition lists."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class ClaimReport:
    """Outcome of one verifiable claim: verdict plus witness/counterexample data."""

    claim: str
    ok: bool
    details: dict = field(default_factory=dict)
    elapsed: float = 0.0

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            "ok": self.ok,
            "details": _jsonable(self.details),
            "elapsed": self.elapsed,
        }


@dataclass
class ConditionItem:
    label: str
    ok: bool
    detail: str = ""


@dataclass
class ConditionReport:
    """Per-condition verdicts carrying the condition labels verbatim."""

    subject: str
    items: list[ConditionItem] = field(default_factory=list)

    def add(self, label: str, ok: bool, detail: str = "") -> None:
        self.items.append(ConditionItem(label, bool(ok), detail))

    @property
    def overall(self) -> bool:
        return all(item.ok for item in self.items)

    def failed(self) -> list[str]:
        return [item.label for item in self.items if not item.ok]

    def __getitem__(self, label: str) -> bool:
        for item in self.items:
            if item.label == label:
                return item.ok
        raise KeyError(label)

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "overall": self.overall,
            "conditions": [
                {"label": i.label, "ok": i.ok, "detail": i.detail} for i in self.items
            ],
        }


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (bool, int, float, str)) or obj is None:
        return obj
    if hasattr(obj, "to_json"):
        return obj.to_json()
    return str(obj)


def dump_json(obj, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(_jsonable(obj), fh, indent=2, sort_keys=True)
        fh.write("\n")
