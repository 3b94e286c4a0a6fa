"""Structured outcomes of claim checks, with a versioned JSON form.

JSON schema (version 1)::

    {
      "schema": "stci.report/1",
      "claim": str,
      "verdict": true | false | null,      # null = inconclusive (cap hit)
      "kind": "certificate" | "consistency check" | "validation",
      "field": str,                        # e.g. "QQ", "GF(32003)"
      "order": str,                        # e.g. "degrevlex"
      "per_generator": [{"generator": str, "result": bool | null,
                          "power": int | null, ...}],
      "stats": {"spairs": int, "max_degree": int, "millis": float, ...},
      "details": {...}                     # witnesses, counts, messages
    }
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from dataclasses import field as _field
from typing import Any

SCHEMA = "stci.report/1"


@dataclass
class VerificationReport:
    claim: str
    verdict: bool | None
    kind: str = "certificate"
    field: str = ""
    order: str = ""
    per_generator: list[dict[str, Any]] = _field(default_factory=list)
    stats: dict[str, Any] = _field(default_factory=dict)
    details: dict[str, Any] = _field(default_factory=dict)

    @property
    def inconclusive(self) -> bool:
        return self.verdict is None

    @property
    def status(self) -> str:
        if self.verdict is None:
            return "INCONCLUSIVE"
        return "PASS" if self.verdict else "FAIL"

    def __bool__(self):
        return self.verdict is True

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        return {"schema": SCHEMA, **d}

    def to_json(self, **kw) -> str:
        kw.setdefault("indent", 2)
        return json.dumps(self.to_dict(), default=str, **kw)

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "VerificationReport":
        d = dict(d)
        schema = d.pop("schema", SCHEMA)
        if schema != SCHEMA:
            raise ValueError(f"unsupported report schema {schema!r}")
        return cls(**d)

    def summary(self) -> str:
        line = f"[{self.status}] {self.claim}"
        extra = []
        if self.field:
            extra.append(self.field)
        if "millis" in self.stats:
            extra.append(f"{self.stats['millis']:.0f} ms")
        if extra:
            line += f" ({', '.join(extra)})"
        return line


def combine_verdicts(verdicts) -> bool | None:
    """False dominates, then inconclusive, then true."""
    verdicts = list(verdicts)
    if any(v is False for v in verdicts):
        return False
    if any(v is None for v in verdicts):
        return None
    return True
