"""Text and JSON rendering of reports."""
from __future__ import annotations

from pathlib import Path
from typing import Literal

from rich.console import Console
from rich.table import Table
from rich.text import Text

from ..models import Report, ReportEntry, Verdict

Format = Literal["text", "json"]


# descriptors such as Z/2[x]/(x^3) must never be read as rich markup
def _cell(value: object) -> Text:
    return Text(str(value))


def _verdict_cells(verdict: Verdict, labels: tuple[str, ...]) -> list[str]:
    def label(x: int) -> str:
        return labels[x] if x < len(labels) else str(x)

    witness = "-" if verdict.witness_s is None else label(verdict.witness_s)
    if verdict.counterexample is None:
        counter = "-"
    else:
        counter = "(" + ", ".join(label(x) for x in verdict.counterexample) + ")"
    return ["yes" if verdict.holds else "no", witness, counter]


def entry_table(entries: list[ReportEntry], labels: tuple[str, ...]) -> Table:
    table = Table(show_header=True, header_style="bold")
    for column in ("Query", "Holds", "Witness s", "Counterexample", "Value"):
        table.add_column(column)
    for entry in entries:
        if entry.verdict is not None:
            cells = _verdict_cells(entry.verdict, labels)
        else:
            cells = ["-", "-", "-"]
        if entry.omega is not None:
            value = str(entry.omega.value)
        else:
            value = entry.value or "-"
        table.add_row(*(_cell(c) for c in (entry.name, *cells, value)))
    return table


def summary_table(report: Report) -> Table:
    frame = report.summary_frame()
    table = Table(show_header=True, header_style="bold")
    for column in frame.columns:
        table.add_column(str(column), justify="left" if column == "Check" else "right")
    for row in frame.itertuples(index=False):
        table.add_row(*(_cell(v) for v in row), style="red" if row.Failed else None)
    return table


def print_report(report: Report, console: Console, labels: tuple[str, ...] = ()) -> None:
    console.rule(Text(f"sabsorb {report.command}"))
    if report.entries:
        console.print(entry_table(report.entries, labels))
    if report.summaries:
        console.print(summary_table(report))
        console.print(f"Instances: {report.checks_run}  passed: {report.passed}  "
                      f"failed: {report.failed}  skipped: {report.skipped}")
    if report.failures:
        console.rule("Failures")
        for failure in report.failures:
            console.print(Text.assemble((failure.check, "red"), " ", failure.instance,
                                        ": ", failure.detail or ""))
            if failure.replay:
                console.print(Text(f"    replay: {failure.replay}"))
    if report.notes:
        console.rule("Notes")
        for note in report.notes:
            console.print(Text(f"- {note}"))
    if report.wall_time is not None:
        console.print(f"Wall time: {report.wall_time:.1f}s")


def emit(report: Report, fmt: Format = "text", out: Path | None = None,
         include_timings: bool = False, labels: tuple[str, ...] = ()) -> None:
    """Write ``report`` to ``out`` or stdout."""
    if fmt == "json":
        text = report.to_json(include_timings=include_timings)
        if out is None:
            print(text)
        else:
            out.write_text(text + "\n", encoding="utf-8")
        return
    if not include_timings:
        report = report.model_copy(update={"wall_time": None})
    if out is None:
        print_report(report, Console(), labels)
    else:
        with out.open("w", encoding="utf-8") as fh:
            print_report(report, Console(file=fh, width=120), labels)
