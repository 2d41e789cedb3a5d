"""Quotient rings R/I with least-index coset representatives."""
from __future__ import annotations

import logging

import numpy as np

from ..errors import DegenerateQuotientError
from .core import FiniteRing, QuotientInfo, RingHom, identity_hom
from .ideals import Ideal, ideal_text

logger = logging.getLogger(__name__)


def make_quotient(ring: FiniteRing, ideal: Ideal) -> tuple[FiniteRing, RingHom]:
    """R/I together with the canonical surjection."""
    if not ideal.is_proper:
        raise DegenerateQuotientError(f"quotient of {ring.descriptor} by the unit ideal")
    if ideal.is_zero:
        return ring, identity_hom(ring)

    members = np.array(sorted(ideal.members))
    coset_min = ring.add_table[:, members].min(axis=1)
    reps = np.unique(coset_min)
    projection = np.searchsorted(reps, coset_min)

    quotient = FiniteRing(
        add_table=projection[ring.add_table[np.ix_(reps, reps)]],
        mul_table=projection[ring.mul_table[np.ix_(reps, reps)]],
        zero=int(projection[ring.zero]),
        one=int(projection[ring.one]),
        descriptor=f"quot({ring.descriptor}, {ideal_text(ideal)})",
        labels=tuple(ring.labels[r] for r in reps.tolist()),
        construction=QuotientInfo(ring, tuple(projection.tolist())),
    )
    logger.debug("built %s (order %d)", quotient.descriptor, quotient.order)
    return quotient, RingHom(ring, quotient, tuple(projection.tolist()), "proj")
