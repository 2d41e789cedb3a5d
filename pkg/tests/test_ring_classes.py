"""Divided, locally divided, chained and arithmetical rings."""
import pytest

from sabsorb.classify import ring_class_predicates
from sabsorb.classify.ring_classes import arithmetical_verdict, distributivity_verdict


def test_z8_is_everything(z8):
    record = ring_class_predicates(z8)
    assert record.divided.holds
    assert record.locally_divided.holds
    assert record.chained.holds
    assert record.arithmetical.holds


def test_z12_is_only_locally_nice(z12):
    record = ring_class_predicates(z12)
    assert not record.chained.holds
    assert not record.divided.holds
    assert record.locally_divided.holds
    assert record.arithmetical.holds


def test_divided_but_not_chained(build):
    record = ring_class_predicates(build("Z/4[x]/(x^2)"))
    assert record.divided.holds
    assert not record.chained.holds
    assert not record.arithmetical.holds
    assert "fails at" in record.arithmetical.note


@pytest.mark.parametrize("text", ["Z/12", "Z/8", "Z/4[x]/(x^2)", "product(Z/2, Z/2)",
                                  "Z/2[x]/(x^3)"])
def test_arithmetical_matches_distributive_lattice(build, text):
    ring = build(text)
    assert arithmetical_verdict(ring).holds == distributivity_verdict(ring).holds
