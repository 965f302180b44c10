"""Machine-readable reports: canonical JSON, CSV and plain text."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

from .nsym import NSymElement
from .sym import SymElement


def rational(x) -> str:
    """Exact rational as ``"num/den"``; integers get denominator 1."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def jsonable(obj):
    """Convert nested results into plain JSON values, never emitting floats."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, int)):
        return obj
    if isinstance(obj, Fraction):
        return rational(obj)
    if isinstance(obj, float):
        raise TypeError("floats are not allowed in reports")
    if isinstance(obj, (SymElement, NSymElement)):
        return obj.to_json()
    if isinstance(obj, dict):
        return {str(k) if not isinstance(k, tuple) else ",".join(map(str, k)): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [jsonable(v) for v in items]
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def dumps(data) -> str:
    """The one canonical encoding; re-serialising parsed output gives the same bytes."""
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


@dataclass
class Report:
    command: dict
    status: str = "pass"
    records: list = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    lines: list = field(default_factory=list)
    timing: float | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def fail(self):
        self.status = "fail"

    def to_json(self, with_timing: bool = False) -> dict:
        out = {
            "command": jsonable(self.command),
            "status": self.status,
            "records": jsonable(self.records),
            "summary": jsonable(self.summary),
        }
        if with_timing and self.timing is not None:
            out["timing_ms"] = round(self.timing * 1000)
        return out

    def render_json(self, with_timing: bool = False) -> str:
        return dumps(self.to_json(with_timing))

    def render_csv(self) -> str:
        rows = [jsonable(r) for r in self.records]
        columns = sorted({k for r in rows for k in r})
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        for r in rows:
            writer.writerow(
                {k: v if isinstance(v, str) else json.dumps(v, sort_keys=True, ensure_ascii=False) for k, v in r.items()}
            )
        return buf.getvalue()

    def render_text(self, with_timing: bool = False) -> str:
        out = list(self.lines)
        if with_timing and self.timing is not None:
            out.append(f"time: {self.timing:.2f}s")
        return "\n".join(out) + "\n"
