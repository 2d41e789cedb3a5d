"""Law-checking harness: corpora, registered checks, runner and reports."""
from .checks import REGISTRY, Check, Finding, Instance, Skip, get_check, resolve
from .corpus import CORPORA, Corpus, CorpusEntry, corpus_spec
from .report import emit, print_report
from .runner import run_check, run_checks

__all__ = [
    "CORPORA",
    "REGISTRY",
    "Check",
    "Corpus",
    "CorpusEntry",
    "Finding",
    "Instance",
    "Skip",
    "corpus_spec",
    "emit",
    "get_check",
    "print_report",
    "resolve",
    "run_check",
    "run_checks",
]
