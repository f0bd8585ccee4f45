"""Structured pass/fail aggregation shared by every verification suite."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

__all__ = ["Check", "VerificationReport", "merge_reports"]


@dataclass
class Check:
    name: str
    passed: bool
    detail: str | None = None  # counterexample payload, serialized
    elapsed: float = 0.0


@dataclass
class VerificationReport:
    suite: str
    p: int
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str | None = None, elapsed: float = 0.0):
        self.checks.append(Check(name, bool(passed), detail, elapsed))

    def timed(self, name: str, func, detail_on_fail=None):
        """Run func() -> bool (or (bool, detail)) as a named check."""
        start = time.monotonic()
        result = func()
        elapsed = time.monotonic() - start
        if isinstance(result, tuple):
            passed, detail = result
        else:
            passed, detail = result, None
        if passed:
            detail = None
        elif detail is None and detail_on_fail is not None:
            detail = detail_on_fail
        self.add(name, passed, detail, elapsed)
        return passed

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def counts(self) -> tuple[int, int]:
        ok = sum(1 for c in self.checks if c.passed)
        return ok, len(self.checks) - ok

    def to_json(self, include_timings: bool = False) -> dict:
        # timings are excluded by default so identical configs give
        # byte-identical output
        checks = []
        for c in self.checks:
            item = {"name": c.name, "status": "pass" if c.passed else "fail"}
            if c.detail is not None:
                item["detail"] = c.detail
            if include_timings:
                item["elapsed"] = round(c.elapsed, 6)
            checks.append(item)
        ok, bad = self.counts
        return {
            "suite": self.suite,
            "p": self.p,
            "passed": ok,
            "failed": bad,
            "checks": checks,
        }

    @staticmethod
    def from_json(payload: dict) -> "VerificationReport":
        report = VerificationReport(payload["suite"], payload["p"])
        for item in payload["checks"]:
            report.add(
                item["name"],
                item["status"] == "pass",
                item.get("detail"),
                item.get("elapsed", 0.0),
            )
        return report

    def render_text(self) -> str:
        lines = [f"[{self.suite}] p={self.p}"]
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            lines.append(f"  {status}  {c.name}")
            if c.detail is not None and not c.passed:
                for detail_line in c.detail.splitlines():
                    lines.append(f"        {detail_line}")
        ok, bad = self.counts
        lines.append(f"  {ok} passed, {bad} failed")
        return "\n".join(lines)

    def __str__(self):
        return self.render_text()


def merge_reports(reports: list[VerificationReport], suite: str = "merged") -> VerificationReport:
    """Concatenate reports; mixed p is rejected, empty input passes."""
    ps = {r.p for r in reports}
    if len(ps) > 1:
        raise ValueError(f"cannot merge reports with mixed p: {sorted(ps)}")
    merged = VerificationReport(suite, ps.pop() if ps else 0)
    for r in reports:
        for c in r.checks:
            merged.checks.append(Check(f"{r.suite}:{c.name}", c.passed, c.detail, c.elapsed))
    return merged


def report_to_text(reports: list[VerificationReport]) -> str:
    return "\n".join(r.render_text() for r in reports)


def report_to_json_str(reports: list[VerificationReport], include_timings: bool = False) -> str:
    return json.dumps([r.to_json(include_timings) for r in reports], indent=2) + "\n"
