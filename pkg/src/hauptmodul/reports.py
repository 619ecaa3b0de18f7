"""Uniform result record shared by every verification catalog."""

from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"


@dataclass
class CheckResult:
    id: str
    suite: str
    status: str
    detail: str = ""
    order: Fraction | int | None = None
    elapsed_ms: int = 0
    data: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def holds(self) -> bool:
        return self.status == PASS

    def to_json(self) -> dict:
        order = self.order
        if isinstance(order, Fraction):
            order = order.numerator if order.denominator == 1 else f"{order.numerator}/{order.denominator}"
        return {
            "id": self.id,
            "suite": self.suite,
            "status": self.status,
            "detail": self.detail,
            "order": order,
            "elapsed_ms": self.elapsed_ms,
        }


# per-module names; they are the same record
RelationReport = CheckResult
IdentityReport = CheckResult
NumericReport = CheckResult
VerificationReport = CheckResult


@contextmanager
def stopwatch():
    box = {}
    t0 = time.perf_counter()
    try:
        yield box
    finally:
        box["ms"] = int(round((time.perf_counter() - t0) * 1000))


def from_checks(cid, suite, checks, order=None, data=None, elapsed_ms=0):
    """Fold a list of ``(label, ok, note)`` into one result."""
    bad = [f"{label}: {note}" if note else label for label, ok, note in checks if not ok]
    if bad:
        detail = "; ".join(bad)
        status = FAIL
    else:
        detail = "; ".join(f"{label}: {note}" if note else label for label, _, note in checks)
        status = PASS
    return CheckResult(cid, suite, status, detail, order, elapsed_ms, data or {})
