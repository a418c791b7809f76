"""Run checks against subjects and collect machine-readable reports.

A check never raises out of :func:`run_check`: a construction that does
not fit the order cap is reported as *skipped*, any other exception as a
*fail* whose witness carries the error text.
"""

from __future__ import annotations

import json
import logging
import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any, Iterable, Sequence

import pandas as pd

from catalog import Subject
from checks import REGISTRY, Check, get_check
from errors import EmptyCatalog, SizeExceeded

log = logging.getLogger(__name__)

STATUSES = ("pass", "fail", "skipped")


@dataclass
class CheckResult:
    check_id: str
    subject: str
    status: str
    reason: str | None = None
    witness: dict[str, Any] | None = None
    note: str | None = None
    elapsed_s: float = 0.0

    @property
    def failed(self) -> bool:
        return self.status == "fail"

    def to_dict(self, *, timing: bool = True) -> dict[str, Any]:
        d = asdict(self)
        if not timing:
            d.pop("elapsed_s")
        else:
            d["elapsed_s"] = round(self.elapsed_s, 6)
        return d

    def to_json(self, *, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing=timing), ensure_ascii=False, default=int)


def run_check(check: Check | str, subject: Subject) -> CheckResult:
    """Evaluate one check on one subject; the first failing claim wins."""
    check = get_check(check) if isinstance(check, str) else check
    started = time.perf_counter()

    def result(status: str, **fields: Any) -> CheckResult:
        return CheckResult(
            check.check_id, subject.label, status,
            elapsed_s=time.perf_counter() - started, **fields,
        )

    try:
        reason = check.applies(subject)
        note = (check.note(subject) or None) if check.note else None
        if reason:
            return result("skipped", reason=reason, note=note)
        for claim in check.claims:
            roles = claim.scan(subject)
            if roles is not None:
                log.info("%s failed on %s: %s %s", check.check_id, subject.label, claim.name, roles)
                return result("fail", witness={"claim": claim.name, **roles}, note=note)
        return result("pass", note=note)
    except SizeExceeded as exc:
        return result("skipped", reason=str(exc))
    except Exception as exc:
        log.exception("%s crashed on %s", check.check_id, subject.label)
        return result("fail", witness={"error": f"{type(exc).__name__}: {exc}"})


def replay_witness(result: CheckResult, subject: Subject) -> bool:
    """Re-decide a failed claim on its stored witness; True when the failure reproduces."""
    if not result.failed or not result.witness:
        raise ValueError(f"{result.check_id} on {result.subject} has no failure to replay")
    check = get_check(result.check_id)
    roles = dict(result.witness)
    if "error" in roles:
        return run_check(check, subject).failed
    claim = check.claim(roles.pop("claim"))
    return not claim.holds(subject, **roles)


# ─────────────────────────────────────────────────────────────────
# Suite
# ─────────────────────────────────────────────────────────────────


@dataclass
class SuiteReport:
    results: list[CheckResult]
    started_at: str = field(default_factory=lambda: time.strftime("%Y-%m-%d %H:%M:%S"))

    @property
    def totals(self) -> dict[str, int]:
        counts = Counter(r.status for r in self.results)
        return {status: counts.get(status, 0) for status in STATUSES}

    @property
    def ok(self) -> bool:
        return not any(r.failed for r in self.results)

    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if r.failed]

    def to_frame(self) -> pd.DataFrame:
        rows = [r.to_dict() for r in self.results]
        columns = list(CheckResult.__dataclass_fields__)
        return pd.DataFrame(rows, columns=columns)

    @property
    def subjects(self) -> list[str]:
        return list(dict.fromkeys(r.subject for r in self.results))

    def summary_record(self, *, timing: bool = True) -> dict[str, Any]:
        summary: dict[str, Any] = {"subjects": self.subjects, "totals": self.totals}
        if timing:
            summary["started_at"] = self.started_at
        return {"summary": summary}

    def to_json_lines(self, *, timing: bool = True) -> str:
        """One line per result, then a closing summary object."""
        lines = [r.to_json(timing=timing) for r in self.results]
        lines.append(json.dumps(self.summary_record(timing=timing), ensure_ascii=False))
        return "\n".join(lines)

    def summary_text(self) -> str:
        """Per-check status counts, as a plain-text table."""
        df = self.to_frame()
        if df.empty:
            return "(nenhum resultado)"
        table = (
            df.pivot_table(index="check_id", columns="status", values="subject", aggfunc="count", fill_value=0)
            .reindex(columns=list(STATUSES), fill_value=0)
            .reindex(list(dict.fromkeys(df["check_id"])))
        )
        totals = self.totals
        footer = (
            f"\nTotal: {totals['pass']} pass, {totals['fail']} fail, "
            f"{totals['skipped']} skipped ({len(self.results)} execuções)"
        )
        return table.to_string() + footer


def run_suite(
    subjects: Sequence[Subject],
    check_ids: Iterable[str] | None = None,
    *,
    jobs: int = 1,
) -> SuiteReport:
    """Every selected check on every subject, ordered by subject then registry order."""
    if not subjects:
        raise EmptyCatalog("no subjects to verify")
    checks = [get_check(c) for c in dict.fromkeys(check_ids)] if check_ids else list(REGISTRY.values())
    checks.sort(key=lambda c: list(REGISTRY).index(c.check_id))

    def run_subject(subject: Subject) -> list[CheckResult]:
        return [run_check(check, subject) for check in checks]

    log.info("run_suite: %d subject(s) × %d check(s), jobs=%d", len(subjects), len(checks), jobs)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            per_subject = list(pool.map(run_subject, subjects))
    else:
        per_subject = [run_subject(s) for s in subjects]
    report = SuiteReport([r for batch in per_subject for r in batch])
    log.info("run_suite: %s", report.totals)
    return report
