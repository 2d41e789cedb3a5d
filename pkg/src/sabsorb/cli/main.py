"""
Command-line interface.

Usage:
    sabsorb classify --ring "Z/12" --ideal "ideal()" --mult "mult(4)" --n 1
    sabsorb omega --ring "Z/12" --ideal "ideal()" --mult "mult(1)"
    sabsorb omega-table --ring "Z/12" --mult "mult(1)"
    sabsorb localize --ring "Z/12" --mult "mult(4)"
    sabsorb amalg "Z/4" id "ideal(2)"
    sabsorb verify --prop all --corpus default --format json
    sabsorb corpus --corpus small
"""
from collections.abc import Iterator
from contextlib import contextmanager
from enum import Enum
from pathlib import Path
from typing import Annotated, Optional

import typer
from rich.console import Console
from rich.text import Text

from .. import __version__
from ..classify import (
    is_n_absorbing,
    is_S_n_absorbing,
    omega,
    omega_table,
    ring_class_predicates,
    s_variant_predicates,
    time_cap,
)
from ..config import configure, configure_logging, get_settings
from ..dsl import build_amalgamation, elaborate, parse, render
from ..dsl.ast import Amalg
from ..errors import DslError, SAbsorbError
from ..harness import Corpus, corpus_spec, emit, resolve, run_checks
from ..models import Report, ReportEntry
from ..rings.core import FiniteRing
from ..rings.ideals import Ideal, all_ideals
from ..rings.multiplicative import MultSet, localize

app = typer.Typer(
    name="sabsorb",
    help="Exact engine for S-n-absorbing ideals over finite commutative rings.",
    no_args_is_help=True,
)

err_console = Console(stderr=True)


class OutputFormat(str, Enum):
    text = "text"
    json = "json"


# =============================================================================
# SHARED OPTIONS
# =============================================================================

RingOpt = Annotated[str, typer.Option("--ring", help="Ring, e.g. 'Z/12' or 'Z/2[x]/(x^3)'.")]
IdealOpt = Annotated[str, typer.Option("--ideal", help="Ideal, e.g. 'ideal(2)'.")]
MultOpt = Annotated[str, typer.Option("--mult", help="Multiplicative set, e.g. 'mult(4)'.")]
NOpt = Annotated[int, typer.Option("--n", min=1, help="Absorbing degree n.")]
FormatOpt = Annotated[Optional[OutputFormat], typer.Option("--format", help="text or json.")]
OutOpt = Annotated[Optional[Path], typer.Option("--out", help="Write the report here.")]
TimingsOpt = Annotated[bool, typer.Option("--timings", help="Include wall time in reports.")]
MaxOrderOpt = Annotated[Optional[int], typer.Option("--max-order", min=2,
                                                    help="Ring order cap.")]
TimeCapOpt = Annotated[Optional[float], typer.Option("--time-cap",
                                                     help="Seconds per query or instance.")]


@contextmanager
def _errors() -> Iterator[None]:
    """Engine errors become a message on stderr and exit code 2."""
    try:
        yield
    except DslError as exc:
        err_console.print(Text.assemble(("parse error ", "bold red"), str(exc)))
        raise typer.Exit(2) from None
    except SAbsorbError as exc:
        err_console.print(Text.assemble((f"{type(exc).__name__} ", "bold red"), str(exc)))
        raise typer.Exit(2) from None


def _ring(text: str) -> FiniteRing:
    return elaborate(parse(text, "ring"))


def _ideal(text: str, ring: FiniteRing) -> Ideal:
    return elaborate(parse(text, "ideal"), ring)


def _mult(text: str, ring: FiniteRing) -> MultSet:
    return elaborate(parse(text, "multset"), ring)


def _emit(report: Report, fmt: Optional[OutputFormat], out: Optional[Path], timings: bool,
          labels: tuple[str, ...] = ()) -> None:
    settings = get_settings()
    chosen = fmt.value if fmt is not None else settings.report_format
    emit(report, chosen, out, timings or settings.include_timings, labels)


def _ring_entries(ring: FiniteRing) -> list[ReportEntry]:
    classes = ring_class_predicates(ring)
    return [
        ReportEntry(name="ring", value=render(ring)),
        ReportEntry(name="order", value=str(ring.order)),
        ReportEntry(name="units", value=str(len(ring.units))),
        ReportEntry(name="ideals", value=str(len(all_ideals(ring)))),
        ReportEntry(name="divided", verdict=classes.divided),
        ReportEntry(name="locally divided", verdict=classes.locally_divided),
        ReportEntry(name="chained", verdict=classes.chained),
        ReportEntry(name="arithmetical", verdict=classes.arithmetical),
    ]


@app.callback()
def main(
    log_level: Annotated[Optional[str], typer.Option("--log-level",
                                                     help="DEBUG, INFO, WARNING...")] = None,
) -> None:
    configure(log_level=log_level)
    configure_logging()


@app.command()
def version() -> None:
    """Print the package version."""
    typer.echo(__version__)


# =============================================================================
# QUERIES
# =============================================================================

@app.command()
def classify(ring: RingOpt, ideal: IdealOpt, mult: MultOpt, n: NOpt = 1,
             fmt: FormatOpt = None, out: OutOpt = None, timings: TimingsOpt = False,
             max_order: MaxOrderOpt = None, cap: TimeCapOpt = None) -> None:
    """n-absorbing, S-n-absorbing, S-prime and S-primary verdicts for one ideal."""
    with _errors():
        settings = configure(max_order=max_order, time_cap=cap)
        R = _ring(ring)
        I, S = _ideal(ideal, R), _mult(mult, R)
        entries = []
        with time_cap(settings.time_cap):
            if I.is_proper:
                entries.append(ReportEntry(name=f"{n}-absorbing", verdict=is_n_absorbing(I, n)))
            entries.append(ReportEntry(name=f"S-{n}-absorbing",
                                       verdict=is_S_n_absorbing(I, S, n, all_witnesses=True)))
            variants = s_variant_predicates(I, S)
        exponent = variants.strong_exponent
        entries += [
            ReportEntry(name="S-prime", verdict=variants.S_prime),
            ReportEntry(name="S-primary", verdict=variants.S_primary),
            ReportEntry(name="strongly S-primary", verdict=variants.strongly_S_primary,
                        value=None if exponent is None else f"exponent {exponent}"),
        ]
        report = Report(command=f'classify --ring "{ring}" --ideal "{ideal}" '
                                f'--mult "{mult}" --n {n}', entries=entries)
        _emit(report, fmt, out, timings, R.labels)


@app.command("omega")
def omega_command(ring: RingOpt, ideal: IdealOpt, mult: MultOpt,
                  fmt: FormatOpt = None, out: OutOpt = None, timings: TimingsOpt = False,
                  max_order: MaxOrderOpt = None, cap: TimeCapOpt = None) -> None:
    """Least n making the ideal S-n-absorbing."""
    with _errors():
        settings = configure(max_order=max_order, time_cap=cap)
        R = _ring(ring)
        I, S = _ideal(ideal, R), _mult(mult, R)
        with time_cap(settings.time_cap):
            value = omega(I, S)
        report = Report(command=f'omega --ring "{ring}" --ideal "{ideal}" --mult "{mult}"',
                        entries=[ReportEntry(name="omega", omega=value)])
        _emit(report, fmt, out, timings, R.labels)


@app.command("omega-table")
def omega_table_command(ring: RingOpt, mult: MultOpt,
                        fmt: FormatOpt = None, out: OutOpt = None, timings: TimingsOpt = False,
                        max_order: MaxOrderOpt = None, cap: TimeCapOpt = None) -> None:
    """ω of every proper ideal missing S, and the set Ω of attained values."""
    with _errors():
        settings = configure(max_order=max_order, time_cap=cap)
        R = _ring(ring)
        S = _mult(mult, R)
        with time_cap(settings.time_cap):
            table = omega_table(R, S)
        entries = [ReportEntry(name=render(I), omega=v)
                   for I, v in sorted(table.values.items(), key=lambda kv: kv[0].sort_key)]
        spectrum = "{" + ",".join(str(v) for v in sorted(table.spectrum)) + "}"
        entries.append(ReportEntry(name="Omega", value=spectrum))
        report = Report(command=f'omega-table --ring "{ring}" --mult "{mult}"', entries=entries)
        _emit(report, fmt, out, timings, R.labels)


# =============================================================================
# CONSTRUCTIONS
# =============================================================================

@app.command("localize")
def localize_command(
    ring: RingOpt, mult: MultOpt,
    show_map: Annotated[bool, typer.Option("--map", help="Print the canonical map.")] = False,
    fmt: FormatOpt = None, out: OutOpt = None, timings: TimingsOpt = False,
    max_order: MaxOrderOpt = None,
) -> None:
    """Build R_S as R modulo Sat_S(0)."""
    with _errors():
        configure(max_order=max_order)
        R = _ring(ring)
        loc = localize(R, _mult(mult, R))
        entries = _ring_entries(loc.ring)
        entries.insert(2, ReportEntry(name="kernel", value=render(loc.kernel)))
        if show_map:
            images = ", ".join(f"{R.labels[x]}->{loc.ring.labels[loc.canonical(x)]}"
                               for x in range(R.order))
            entries.append(ReportEntry(name="canonical map", value=images))
        report = Report(command=f'localize --ring "{ring}" --mult "{mult}"', entries=entries)
        _emit(report, fmt, out, timings, loc.ring.labels)


@app.command("amalg")
def amalg_command(
    base: Annotated[str, typer.Argument(help="Ring A, e.g. 'Z/4'.")],
    hom: Annotated[str, typer.Argument(help="id, reduce or table(...).")],
    ideal: Annotated[str, typer.Argument(help="Ideal J of the target ring.")],
    fmt: FormatOpt = None, out: OutOpt = None, timings: TimingsOpt = False,
    max_order: MaxOrderOpt = None,
) -> None:
    """Build the amalgamation A ⋈^f J."""
    with _errors():
        configure(max_order=max_order)
        node = Amalg(parse(base, "ring"), parse(hom, "hom"), parse(ideal, "ideal"))
        amal = build_amalgamation(node)
        report = Report(command=f'amalg "{base}" {hom} "{ideal}"',
                        entries=_ring_entries(amal.ring))
        _emit(report, fmt, out, timings, amal.ring.labels)


# =============================================================================
# HARNESS
# =============================================================================

@app.command()
def verify(
    prop: Annotated[str, typer.Option("--prop", help="Check slug, comma list, or 'all'.")] = "all",
    corpus: Annotated[str, typer.Option("--corpus", help="Named corpus.")] = "default",
    ring: Annotated[Optional[str], typer.Option("--ring",
                                                help="Run on this single ring instead.")] = None,
    seed: Annotated[Optional[int], typer.Option("--seed",
                                                help="Append random product rings.")] = None,
    n_max: Annotated[Optional[int], typer.Option("--n-max", min=1)] = None,
    fmt: FormatOpt = None, out: OutOpt = None, timings: TimingsOpt = False,
    max_order: MaxOrderOpt = None, cap: TimeCapOpt = None,
) -> None:
    """Run registered law checks over a corpus; exits 1 on any failure."""
    with _errors():
        configure(max_order=max_order, time_cap=cap)
        checks = resolve(prop)
        spec = corpus_spec("custom" if ring else corpus, rings=[ring] if ring else None,
                           seed=seed, n_max=n_max)
        report = run_checks(checks, Corpus.build(spec))
        where = f'--ring "{ring}"' if ring else f"--corpus {corpus}"
        report.command = f"verify --prop {prop} {where}"
        _emit(report, fmt, out, timings)
    if not report.ok:
        raise typer.Exit(1)


@app.command("corpus")
def corpus_command(
    corpus: Annotated[str, typer.Option("--corpus", help="Named corpus.")] = "default",
    seed: Annotated[Optional[int], typer.Option("--seed")] = None,
    fmt: FormatOpt = None, out: OutOpt = None, timings: TimingsOpt = False,
    max_order: MaxOrderOpt = None,
) -> None:
    """List a corpus: rings, orders, ideal and multiplicative-set counts."""
    with _errors():
        configure(max_order=max_order)
        built = Corpus.build(corpus_spec(corpus, seed=seed))
        entries = [
            ReportEntry(name=e.expr, value=f"order {e.ring.order}, "
                                           f"{len(built.ideals(e.ring))} ideals, "
                                           f"{len(built.family(e.ring))} multiplicative sets")
            for e in built.entries
        ]
        report = Report(command=f"corpus --corpus {corpus}", entries=entries)
        if built.skipped:
            report.notes.append(f"over the order cap: {', '.join(built.skipped)}")
        _emit(report, fmt, out, timings)


if __name__ == "__main__":
    app()
