"""Divided, locally divided, chained and arithmetical rings."""
from __future__ import annotations

from ..models import RingClassRecord, Verdict
from ..rings.core import FiniteRing
from ..rings.ideals import (
    all_ideals,
    divided_violation,
    ideal_intersection,
    ideal_sum,
    ideal_text,
    maximal_ideals,
    prime_ideals,
)
from ..rings.multiplicative import complement_mult_set, localize


def divided_verdict(ring: FiniteRing) -> Verdict:
    """Every prime ideal is divided."""
    for prime in prime_ideals(ring):
        a = divided_violation(prime)
        if a is not None:
            return Verdict(holds=False, counterexample=(a,),
                           note=f"prime {ideal_text(prime)} not divided at {ring.labels[a]}")
    return Verdict(holds=True)


def chained_verdict(ring: FiniteRing) -> Verdict:
    """Principal ideals (hence all ideals) are totally ordered."""
    principal = [frozenset(ring.mul_rows[a]) for a in range(ring.order)]
    for a in range(ring.order):
        for b in range(a + 1, ring.order):
            if not (principal[a] <= principal[b] or principal[b] <= principal[a]):
                return Verdict(holds=False, counterexample=(a, b))
    return Verdict(holds=True)


def _local_verdict(ring: FiniteRing, test) -> Verdict:
    for m in maximal_ideals(ring):
        loc = localize(ring, complement_mult_set(m))
        inner = test(loc.ring)
        if not inner.holds:
            return Verdict(holds=False, counterexample=inner.counterexample,
                           note=f"fails at {ideal_text(m)}: localization {loc.ring.descriptor}")
    return Verdict(holds=True)


def locally_divided_verdict(ring: FiniteRing) -> Verdict:
    return _local_verdict(ring, divided_verdict)


def arithmetical_verdict(ring: FiniteRing) -> Verdict:
    """Localizations at every maximal ideal are chained."""
    return _local_verdict(ring, chained_verdict)


def distributivity_verdict(ring: FiniteRing) -> Verdict:
    """(A+B)∩C = (A∩C)+(B∩C) over the whole ideal lattice."""
    lattice = all_ideals(ring)
    for a in lattice:
        for b in lattice:
            for c in lattice:
                lhs = ideal_intersection(ideal_sum(a, b), c)
                rhs = ideal_sum(ideal_intersection(a, c), ideal_intersection(b, c))
                if lhs != rhs:
                    return Verdict(holds=False, note=f"{ideal_text(a)}, {ideal_text(b)}, "
                                                     f"{ideal_text(c)}")
    return Verdict(holds=True)


def ring_class_predicates(ring: FiniteRing) -> RingClassRecord:
    return RingClassRecord(
        divided=divided_verdict(ring),
        locally_divided=locally_divided_verdict(ring),
        chained=chained_verdict(ring),
        arithmetical=arithmetical_verdict(ring),
    )
