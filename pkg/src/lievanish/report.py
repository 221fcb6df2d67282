"""Structured check reports with a byte-stable JSON form."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

__all__ = ["TableRow", "TableReport"]


@dataclass
class TableRow:
    """One checked quantity: ``match`` is exact equality of expected and computed."""

    inputs: dict
    expected: object
    computed: object
    match: bool
    citation: str = ""

    @classmethod
    def check(cls, inputs: dict, expected, computed, citation: str = "") -> "TableRow":
        return cls(inputs, expected, computed, expected == computed, citation)

    def as_dict(self) -> dict:
        return {
            "inputs": self.inputs,
            "expected": self.expected,
            "computed": self.computed,
            "match": self.match,
            "citation": self.citation,
        }


@dataclass
class TableReport:
    """Rows are checked; ``extras`` hold computed-only values with nothing to compare."""

    table_id: str
    rows: list = field(default_factory=list)
    runtime_ms: int = 0
    extras: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.match for r in self.rows)

    @property
    def mismatches(self) -> list:
        return [r for r in self.rows if not r.match]

    def add(self, inputs: dict, expected, computed, citation: str = "") -> TableRow:
        row = TableRow.check(inputs, expected, computed, citation)
        self.rows.append(row)
        return row

    def as_dict(self) -> dict:
        return {
            "table_id": self.table_id,
            "ok": self.ok,
            "runtime_ms": self.runtime_ms,
            "rows": [r.as_dict() for r in self.rows],
            "extras": self.extras,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "TableReport":
        rows = [TableRow(r["inputs"], r["expected"], r["computed"], r["match"], r["citation"])
                for r in data["rows"]]
        return cls(data["table_id"], rows, data["runtime_ms"], data.get("extras", []))

    @classmethod
    def from_json(cls, text: str) -> "TableReport":
        return cls.from_dict(json.loads(text))

    def to_tsv(self) -> str:
        lines = ["inputs\texpected\tcomputed\tmatch\tcitation"]
        for r in self.rows:
            inputs = ";".join(f"{k}={_flat(v)}" for k, v in r.inputs.items())
            lines.append(f"{inputs}\t{_flat(r.expected)}\t{_flat(r.computed)}\t"
                         f"{'yes' if r.match else 'NO'}\t{r.citation}")
        return "\n".join(lines)

    def summary(self) -> str:
        bad = len(self.mismatches)
        status = "PASS" if bad == 0 else f"FAIL ({bad} mismatched)"
        return f"{self.table_id}: {len(self.rows)} rows, {status}, {self.runtime_ms} ms"


def _flat(v) -> str:
    if isinstance(v, (list, tuple)):
        return ",".join(str(x) for x in v)
    return "" if v is None else str(v)
