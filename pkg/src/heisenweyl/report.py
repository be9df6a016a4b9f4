"""Verification records and their line-delimited JSON form."""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field


@dataclass
class Entry:
    suite: str
    check: str
    anchor: str
    params: dict
    passed: bool
    witness: str | None = None
    micros: int = 0

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_record(self) -> dict:
        rec = {
            "suite": self.suite,
            "check": self.check,
            "anchor": self.anchor,
            "params": self.params,
            "status": self.status,
            "micros": self.micros,
        }
        if self.witness is not None:
            rec["witness"] = self.witness
        return rec

    def to_json(self) -> str:
        return json.dumps(self.to_record(), sort_keys=True, ensure_ascii=False)

    @classmethod
    def from_record(cls, rec: dict) -> "Entry":
        status = rec["status"]
        if status not in ("pass", "fail"):
            raise ValueError(f"bad status {status!r}")
        return cls(
            suite=rec["suite"],
            check=rec["check"],
            anchor=rec.get("anchor", ""),
            params=rec.get("params", {}),
            passed=status == "pass",
            witness=rec.get("witness"),
            micros=int(rec.get("micros", 0)),
        )

    def line(self) -> str:
        head = f"{self.status.upper():4} {self.suite}/{self.check}"
        if self.params:
            head += " " + ",".join(f"{k}={v}" for k, v in self.params.items())
        if not self.passed and self.witness:
            head += f"  witness: {self.witness}"
        return head


def run_check(suite, check, anchor, params, fn) -> Entry:
    """Time ``fn()``; it returns a bool or a ``(bool, witness)`` pair."""
    start = time.perf_counter()
    result = fn()
    micros = int((time.perf_counter() - start) * 1e6)
    if isinstance(result, tuple):
        ok, witness = result
    else:
        ok, witness = result, None
    ok = bool(ok)
    if not ok and witness is None:
        witness = "check returned false"
    return Entry(suite, check, anchor, dict(params), ok, None if ok else str(witness), micros)


@dataclass
class VerificationReport:
    suite: str
    entries: list = field(default_factory=list)

    def add(self, entry: Entry):
        self.entries.append(entry)
        return entry

    def extend(self, entries):
        self.entries.extend(entries)

    @property
    def passed(self) -> int:
        return sum(e.passed for e in self.entries)

    @property
    def failed(self) -> int:
        return len(self.entries) - self.passed

    def all_passed(self) -> bool:
        return self.failed == 0

    def summary(self) -> dict:
        return {"suite": self.suite, "total": len(self.entries), "passed": self.passed, "failed": self.failed}

    def summary_line(self) -> str:
        s = self.summary()
        return f"{s['suite']}: {s['passed']}/{s['total']} passed, {s['failed']} failed"

    def to_jsonl(self) -> str:
        return "".join(e.to_json() + "\n" for e in self.entries)

    @classmethod
    def from_jsonl(cls, text: str, suite: str | None = None) -> "VerificationReport":
        entries = [Entry.from_record(json.loads(line)) for line in text.splitlines() if line.strip()]
        if suite is None:
            names = {e.suite for e in entries}
            suite = names.pop() if len(names) == 1 else "all"
        return cls(suite, entries)

    def as_dict(self) -> dict:
        return {"summary": self.summary(), "entries": [asdict(e) for e in self.entries]}
