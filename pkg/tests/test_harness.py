"""Corpora, the check registry, the runner and report emission."""
import json

import pytest

from sabsorb.errors import (
    InternalInconsistencyError,
    PreconditionError,
    TimeCapExceeded,
    UnknownCheckError,
)
from sabsorb.harness import (
    CORPORA,
    REGISTRY,
    Check,
    Corpus,
    Finding,
    Instance,
    Skip,
    corpus_spec,
    emit,
    get_check,
    resolve,
    run_check,
    run_checks,
)
from sabsorb.harness.corpus import random_rings
from sabsorb.harness.runner import TIME_CAP_REASON, run_instance

TINY = [
    "Z/4",
    "Z/6",
    "Z/8",
    "Z/12",
    "product(Z/2, Z/3)",
    "Z/2[x]/(x^2)",
    "amalg(Z/4, id, ideal(2))",
    "amalg(Z/4, reduce, ideal(1))",
]


@pytest.fixture
def tiny():
    return Corpus.build(corpus_spec("tiny", rings=TINY, n_max=2))


# =============================================================================
# CORPORA
# =============================================================================

def test_named_corpora():
    assert set(CORPORA) == {"default", "small", "products", "fields", "amalgams"}
    assert len(CORPORA["default"]()) == 59
    with pytest.raises(PreconditionError):
        corpus_spec("nonexistent")


def test_order_cap_skips_rings():
    corpus = Corpus.build(corpus_spec("custom", rings=["Z/4", "Z/12"], max_order=8))
    assert [e.expr for e in corpus.entries] == ["Z/4"]
    assert corpus.skipped == ["Z/12"]


def test_random_rings_are_reproducible():
    first = random_rings(7)
    assert first == random_rings(7)
    assert len(first) == 3
    assert all(expr.startswith("product(Z/") for expr in first)


def test_multset_family():
    corpus = Corpus.build(corpus_spec("custom", rings=["Z/12"]))
    ring = corpus.entries[0].ring
    family = corpus.family(ring)
    assert len(family) == 8
    assert family[0].members == {1}
    assert all(not s.contains_zero for s in family)
    units_only = Corpus.build(corpus_spec("custom", rings=["Z/12"], policy="units"))
    assert len(units_only.family(ring)) == 2


def test_n_range_is_clipped_by_omega_bound(tiny):
    z4 = tiny.entries[0].ring
    assert list(tiny.n_range(z4)) == [1, 2, 3]


# =============================================================================
# REGISTRY
# =============================================================================

def test_registry():
    assert len(REGISTRY) == 34
    slugs = list(REGISTRY)
    assert slugs[0] == "product-absorbing"
    assert slugs[-1] == "amalgam-counterexample-search"
    assert [c.slug for c in resolve("radical-law, omega-product")] == ["radical-law",
                                                                       "omega-product"]
    assert len(resolve("all")) == 34
    with pytest.raises(UnknownCheckError):
        get_check("no-such-check")


# =============================================================================
# RUNNER
# =============================================================================

def _demo(run):
    return Check("demo", "demo", lambda corpus: iter(())), Instance("k", run, "replay me")


def test_instance_outcomes():
    def fails():
        return "broken"

    def skips():
        raise Skip("not applicable")

    def precondition():
        raise PreconditionError("no")

    def inconsistent():
        raise InternalInconsistencyError("bound exceeded")

    def slow():
        raise TimeCapExceeded("late")

    outcome = run_instance(*_demo(fails), cap=None)
    assert outcome.status == "failed" and outcome.replay == "replay me"
    outcome = run_instance(*_demo(skips), cap=None)
    assert outcome.status == "skipped" and outcome.detail == "not applicable"
    assert outcome.replay is None
    # only Skip and the time cap skip; an engine error inside a run is a failure
    outcome = run_instance(*_demo(precondition), cap=None)
    assert outcome.status == "failed" and outcome.detail == "PreconditionError: no"
    assert outcome.replay == "replay me"
    outcome = run_instance(*_demo(inconsistent), cap=None)
    assert outcome.status == "failed"
    assert outcome.detail == "InternalInconsistencyError: bound exceeded"
    assert run_instance(*_demo(slow), cap=None).detail == TIME_CAP_REASON
    outcome = run_instance(*_demo(lambda: Finding("found one")), cap=None)
    assert outcome.status == "passed" and outcome.detail == "found one"
    assert run_instance(*_demo(lambda: None), cap=None).status == "passed"


@pytest.mark.parametrize("slug", ["colon-characterization", "radical-law",
                                  "localization-equivalence", "minimal-prime-bound",
                                  "quantifier-order"])
def test_single_checks_pass(tiny, slug):
    summary, failures, _ = run_check(get_check(slug), tiny)
    assert failures == []
    assert summary.passed > 0


def test_all_checks_on_tiny_corpus(tiny):
    report = run_checks(resolve("all"), tiny)
    assert [f.instance for f in report.failures] == []
    assert len(report.summaries) == 34
    assert report.checks_run == report.passed + report.failed + report.skipped
    assert any("agree on all" in note for note in report.notes)
    assert report.ok


def test_colon_stabilization_checked_at_omega():
    corpus = Corpus.build(corpus_spec("custom", rings=["Z/24"]))
    summary, failures, findings = run_check(get_check("colon-stabilization"), corpus)
    assert failures == []
    assert summary.passed > 0
    assert any("ideal()" in f and "(ω = 1), s=2, n=2" in f for f in findings)
    report = run_checks([get_check("colon-stabilization")], corpus)
    assert report.ok
    assert any(note.startswith("colon stabilization is checked at n = ω; it fails past ω")
               for note in report.notes)


def test_report_is_deterministic(tiny):
    checks = resolve("omega-product,chained-dichotomy")
    first = run_checks(checks, tiny).to_json()
    again = Corpus.build(corpus_spec("tiny", rings=TINY, n_max=2))
    assert run_checks(checks, again).to_json() == first
    assert "wall_time" not in json.loads(first)


def test_emit_writes_files(tiny, tmp_path):
    report = run_checks(resolve("radical-law"), tiny)
    out = tmp_path / "report.json"
    emit(report, "json", out)
    data = json.loads(out.read_text(encoding="utf-8"))
    assert data["summaries"][0]["check"] == "radical-law"
    text = tmp_path / "report.txt"
    emit(report, "text", text)
    assert "radical-law" in text.read_text(encoding="utf-8")


@pytest.mark.slow
def test_default_corpus_has_no_failures():
    report = run_checks(resolve("all"), Corpus.build(corpus_spec("default")))
    assert [(f.check, f.instance) for f in report.failures] == []
