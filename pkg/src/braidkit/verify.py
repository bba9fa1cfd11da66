"""Per-record verification of the knot dataset."""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .alexander import alexander_burau, alexander_from_homfly, to_lspace_form
from .braid import closure_summary, is_positive, positive_braid_genus
from .dataset import KnotRecord
from .errors import BraidkitError, ResourceLimit
from .homfly import Budget, homfly_vz, mfw_bound
from .polynomial import format_laurent

__all__ = [
    "SCHEMA_VERSION",
    "CHECKS",
    "CheckOutcome",
    "VerificationReport",
    "verify_record",
    "verify_records",
    "default_budget_seconds",
]

SCHEMA_VERSION = 1
DEFAULT_BUDGET_SECONDS = 600.0
BUDGET_ENV = "BRAIDKIT_BUDGET_SECONDS"

CHECKS = ("positivity", "knot-closure", "genus", "lspace-form", "alexander", "mfw", "alexander-agreement")

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


def default_budget_seconds() -> float:
    return float(os.environ.get(BUDGET_ENV, DEFAULT_BUDGET_SECONDS))


@dataclass(frozen=True)
class CheckOutcome:
    name: str
    status: str
    expected: object = None
    got: object = None
    reason: str | None = None
    seconds: float = 0.0

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "expected": self.expected,
                "got": self.got, "reason": self.reason, "seconds": self.seconds}

    @classmethod
    def from_dict(cls, d: dict) -> "CheckOutcome":
        return cls(d["name"], d["status"], d.get("expected"), d.get("got"), d.get("reason"), d.get("seconds", 0.0))


@dataclass(frozen=True)
class VerificationReport:
    record: str
    checks: tuple[CheckOutcome, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def outcome(self, name: str) -> CheckOutcome:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {"schema_version": SCHEMA_VERSION, "record": self.record, "ok": self.ok,
                "checks": [c.to_dict() for c in self.checks]}

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        if d.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported report schema_version {d.get('schema_version')!r}")
        return cls(d["record"], tuple(CheckOutcome.from_dict(c) for c in d["checks"]))


def _compare(name, expected, compute) -> tuple[CheckOutcome, object]:
    """Run ``compute``; pass iff it returns ``expected``.  Returns the outcome and the value."""
    start = time.perf_counter()
    try:
        got = compute()
    except BraidkitError as exc:
        return CheckOutcome(name, FAIL, expected, None, f"{type(exc).__name__}: {exc}",
                            time.perf_counter() - start), None
    elapsed = time.perf_counter() - start
    status = PASS if got == expected else FAIL
    return CheckOutcome(name, status, expected, got, None, elapsed), got


def verify_record(record: KnotRecord, budget: Budget | None = None) -> VerificationReport:
    """Run every check on one record.  Failures become report entries, never exceptions."""
    if budget is None:
        budget = Budget(seconds=default_budget_seconds())
    word = record.word
    checks = []

    out, _ = _compare("positivity", True, lambda: is_positive(word))
    checks.append(out)
    out, _ = _compare("knot-closure", 1, lambda: closure_summary(word).components)
    checks.append(out)
    out, _ = _compare("genus", record.genus, lambda: positive_braid_genus(word))
    checks.append(out)

    start = time.perf_counter()
    try:
        burau = alexander_burau(word)
        form = to_lspace_form(burau)
    except BraidkitError as exc:
        elapsed = time.perf_counter() - start
        checks.append(CheckOutcome("lspace-form", FAIL, "L-space normal form", None,
                                   f"{type(exc).__name__}: {exc}", elapsed))
        checks.append(CheckOutcome("alexander", FAIL, list(record.alexander_exponents), None,
                                   "no exponent sequence", 0.0))
        burau = None
    else:
        elapsed = time.perf_counter() - start
        checks.append(CheckOutcome("lspace-form", PASS, None, None, None, elapsed))
        got = list(form.exponents)
        expected = list(record.alexander_exponents)
        checks.append(CheckOutcome("alexander", PASS if got == expected else FAIL, expected, got, None, 0.0))

    start = time.perf_counter()
    try:
        homfly = homfly_vz(word, budget)
        got_mfw = mfw_bound(homfly)
    except ResourceLimit as exc:
        elapsed = time.perf_counter() - start
        checks.append(CheckOutcome("mfw", SKIPPED, record.mfw_bound, None, f"resource-limit: {exc.reason}", elapsed))
        checks.append(CheckOutcome("alexander-agreement", SKIPPED, None, None, "resource-limit: no HOMFLY polynomial", 0.0))
        return VerificationReport(record.manifold, tuple(checks))
    except BraidkitError as exc:
        checks.append(CheckOutcome("mfw", FAIL, record.mfw_bound, None, f"{type(exc).__name__}: {exc}",
                                   time.perf_counter() - start))
        checks.append(CheckOutcome("alexander-agreement", SKIPPED, None, None, "no HOMFLY polynomial", 0.0))
        return VerificationReport(record.manifold, tuple(checks))
    elapsed = time.perf_counter() - start
    ok = got_mfw == record.mfw_bound == record.braid_index
    reason = None if ok else f"table braid index {record.braid_index}, table MFW {record.mfw_bound}"
    checks.append(CheckOutcome("mfw", PASS if ok else FAIL, record.mfw_bound, got_mfw, reason, elapsed))

    if burau is None:
        checks.append(CheckOutcome("alexander-agreement", SKIPPED, None, None, "no Burau polynomial", 0.0))
    else:
        out, _ = _compare("alexander-agreement", format_laurent(burau),
                          lambda: format_laurent(alexander_from_homfly(homfly)))
        checks.append(out)
    return VerificationReport(record.manifold, tuple(checks))


def _verify_one(args):
    record, budget = args
    return verify_record(record, budget)


def verify_records(records, budget: Budget | None = None, parallel: int = 1) -> list[VerificationReport]:
    """Verify many records, optionally in worker processes.  Output is sorted by record id."""
    if budget is None:
        budget = Budget(seconds=default_budget_seconds())
    jobs = [(r, budget) for r in records]
    if parallel > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            reports = list(pool.map(_verify_one, jobs))
    else:
        reports = [_verify_one(j) for j in jobs]
    return sorted(reports, key=lambda rep: rep.record)
