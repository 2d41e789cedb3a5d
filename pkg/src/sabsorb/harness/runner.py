"""
Run registered checks over a corpus and fold the outcomes into a Report.

Instances run one at a time under the per-instance time cap. Outcomes are
sorted by instance key before they are counted, so a report depends only on
the corpus and the registry.
"""
from __future__ import annotations

import logging
import time

from ..classify.absorbing import time_cap
from ..errors import SAbsorbError, TimeCapExceeded
from ..models import CheckOutcome, CheckSummary, Report
from .checks import Check, Finding, Instance, Skip
from .corpus import Corpus

logger = logging.getLogger(__name__)

TIME_CAP_REASON = "time-cap"


def run_instance(check: Check, instance: Instance, cap: float | None) -> CheckOutcome:
    """
    Execute one instance; never raises for engine errors.

    Only Skip and the time cap count as skipped. Any other engine error,
    PreconditionError included, escaped a check's own hypothesis tests and is
    a failure.
    """
    def outcome(status: str, detail: str | None = None) -> CheckOutcome:
        return CheckOutcome(check=check.slug, instance=instance.key, status=status,
                            detail=detail,
                            replay=instance.replay if status == "failed" else None)

    try:
        with time_cap(cap):
            result = instance.run()
    except Skip as exc:
        return outcome("skipped", exc.reason)
    except TimeCapExceeded:
        logger.warning("%s: time cap hit on %s", check.slug, instance.key)
        return outcome("skipped", TIME_CAP_REASON)
    except SAbsorbError as exc:
        logger.error("%s: %s on %s", check.slug, exc, instance.key)
        return outcome("failed", f"{type(exc).__name__}: {exc}")

    if isinstance(result, Finding):
        return outcome("passed", result.text)
    if result is not None:
        logger.error("%s failed on %s: %s", check.slug, instance.key, result)
        return outcome("failed", result)
    return outcome("passed")


def run_check(check: Check, corpus: Corpus) -> tuple[CheckSummary, list[CheckOutcome], list[str]]:
    """All instances of one check: summary, failures, findings."""
    outcomes = [run_instance(check, inst, corpus.spec.time_cap)
                for inst in check.instances(corpus)]
    outcomes.sort(key=lambda o: o.instance)

    summary = CheckSummary(check=check.slug)
    failures: list[CheckOutcome] = []
    findings: list[str] = []
    for o in outcomes:
        summary.run += 1
        if o.status == "passed":
            summary.passed += 1
            if o.detail:
                findings.append(o.detail)
        elif o.status == "failed":
            summary.failed += 1
            failures.append(o)
        else:
            summary.skipped += 1
            reason = o.detail or "unspecified"
            summary.skip_reasons[reason] = summary.skip_reasons.get(reason, 0) + 1
    return summary, failures, findings


def run_checks(checks: list[Check], corpus: Corpus) -> Report:
    """Run ``checks`` in registry order and collect one report."""
    started = time.perf_counter()
    report = Report(command="verify")
    if corpus.skipped:
        report.notes.append(f"rings over the order cap left out: {', '.join(corpus.skipped)}")

    total = len(checks)
    for i, check in enumerate(checks, 1):
        logger.info("[%d/%d] %s...", i, total, check.slug)
        summary, failures, findings = run_check(check, corpus)
        logger.info("    -> %d run, %d passed, %d failed, %d skipped",
                    summary.run, summary.passed, summary.failed, summary.skipped)
        if summary.run and summary.run == summary.skipped:
            logger.warning("%s: every instance skipped", check.slug)

        report.summaries.append(summary)
        report.failures.extend(failures)
        report.notes.extend(findings)
        if check.summarize is not None:
            note = check.summarize(summary, findings)
            if note:
                report.notes.append(note)

        report.checks_run += summary.run
        report.passed += summary.passed
        report.failed += summary.failed
        report.skipped += summary.skipped

    report.wall_time = time.perf_counter() - started
    return report
