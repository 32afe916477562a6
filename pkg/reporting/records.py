"""Check records and the run report."""

import json
import time
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Dict, List, Optional

import pandas as pd

from config import VerificationConfig
from utils.helpers import truncate_text

PASS = "pass"
FAIL = "fail"
RECORDED = "recorded"
STATUSES = (PASS, FAIL, RECORDED)


@dataclass
class CheckRecord:
    """Outcome of one identity or numeric check."""

    name: str
    status: str
    witness: Optional[str] = None
    wall_time: float = 0.0
    detail: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status != FAIL

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def verdict(name: str, ok: bool, witness: Any = None, started: Optional[float] = None,
            **detail) -> CheckRecord:
    """Build a pass/fail record; the witness is kept only on failure."""
    elapsed = time.perf_counter() - started if started is not None else 0.0
    return CheckRecord(
        name=name,
        status=PASS if ok else FAIL,
        witness=None if ok or witness is None else str(witness),
        wall_time=elapsed,
        detail=detail,
    )


def recorded(name: str, value: Any, started: Optional[float] = None, **detail) -> CheckRecord:
    """A computed quantity reported without an expected value."""
    elapsed = time.perf_counter() - started if started is not None else 0.0
    return CheckRecord(name=name, status=RECORDED, witness=str(value), wall_time=elapsed,
                       detail=detail)


def timed(name: str, check: Callable[[], Any], **detail) -> CheckRecord:
    """Run a boolean check and time it."""
    started = time.perf_counter()
    return verdict(name, bool(check()), started=started, **detail)


@dataclass
class Report:
    """Everything one CLI run produced."""

    command: str
    system: Optional[str] = None
    records: List[CheckRecord] = field(default_factory=list)

    def add(self, record: CheckRecord) -> CheckRecord:
        self.records.append(record)
        return record

    def extend(self, records) -> None:
        self.records.extend(records)

    @property
    def failed(self) -> List[CheckRecord]:
        return [r for r in self.records if r.status == FAIL]

    @property
    def ok(self) -> bool:
        return not self.failed

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema": VerificationConfig.REPORT_SCHEMA,
            "command": self.command,
            "system": self.system,
            "ok": self.ok,
            "records": [r.to_dict() for r in self.records],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, default=str)

    def to_frame(self) -> pd.DataFrame:
        """Summary table: one row per record, wall times rounded for display."""
        rows = [{"check": r.name, "status": r.status, "seconds": round(r.wall_time, 3),
                 "witness": truncate_text(r.witness or "", 60)} for r in self.records]
        return pd.DataFrame(rows, columns=["check", "status", "seconds", "witness"])

    def summary(self) -> str:
        counts = {status: sum(r.status == status for r in self.records) for status in STATUSES}
        return ", ".join(f"{counts[s]} {s}" for s in STATUSES)
