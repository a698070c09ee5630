"""Verification reports with deterministic serialization."""
from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any, List, Optional

from .series import Series


@dataclass
class Check:
    name: str
    passed: bool
    residual: Optional[Series] = None
    detail: dict = field(default_factory=dict)
    runtime: float = 0.0

    def as_dict(self) -> dict:
        out = {"name": self.name, "status": "pass" if self.passed else "fail"}
        if self.detail:
            out["detail"] = _jsonable(self.detail)
        if not self.passed and self.residual is not None:
            out["residual"] = self.residual.to_list()
        return out


@dataclass
class VerificationReport:
    suite: str
    checks: List[Check] = field(default_factory=list)
    notes: list = field(default_factory=list)  # documented observations, never asserted

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def runtime(self) -> float:
        return sum(c.runtime for c in self.checks)

    def add(self, name: str, passed: bool, residual: Series = None, runtime: float = 0.0, **detail) -> Check:
        c = Check(name, bool(passed), residual, detail, runtime)
        self.checks.append(c)
        return c

    def add_residual(self, name: str, residual: Series, runtime: float = 0.0, **detail) -> Check:
        """A check that passes iff ``residual`` is identically zero."""
        return self.add(name, residual.is_zero(), residual, runtime, **detail)

    def extend(self, other: "VerificationReport", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.residual, c.detail, c.runtime))

    def as_dict(self) -> dict:
        """Report body; runtime lives in :meth:`footer` so the body is reproducible."""
        return {
            "suite": self.suite,
            "status": "pass" if self.passed else "fail",
            "checks": [c.as_dict() for c in self.checks],
            **({"notes": _jsonable(self.notes)} if self.notes else {}),
        }

    def footer(self) -> dict:
        return {"runtime_seconds": round(self.runtime, 6),
                "check_runtimes": {c.name: round(c.runtime, 6) for c in self.checks}}

    def to_json(self, with_footer: bool = False) -> str:
        body = self.as_dict()
        if with_footer:
            body = {"report": body, "footer": self.footer()}
        return json.dumps(body, ensure_ascii=False, indent=2, sort_keys=False)

    def to_text(self) -> str:
        lines = [f"suite {self.suite}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            lines.append(f"  [{'pass' if c.passed else 'FAIL'}] {c.name}")
            if not c.passed and c.residual is not None:
                lines.append(f"      residual: {c.residual}")
        for n in self.notes:
            lines.append(f"  note: {n}")
        return "\n".join(lines)


@contextmanager
def timed():
    """Yields a one-element list that receives the elapsed seconds."""
    box = [0.0]
    start = time.perf_counter()
    try:
        yield box
    finally:
        box[0] = time.perf_counter() - start


def _jsonable(x: Any):
    from fractions import Fraction

    if isinstance(x, Series):
        return x.to_list()
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x
