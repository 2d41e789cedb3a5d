"""
Decision procedures for absorbing and S-absorbing ideals.

Tuple searches run over multisets of associate-class representatives of the
nonunits: a tuple containing a unit always satisfies the absorbing condition,
and every membership test is invariant under scaling an entry by a unit.

For a finite multiplicative set S the product t of all members is a uniform
witness whenever any member is (s·x in I implies t·x in I). A search first
runs against t; a tuple failing there fails for every s in S.
"""
from __future__ import annotations

import logging
import math
import time
from collections.abc import Iterator, Sequence
from contextlib import contextmanager
from contextvars import ContextVar
from itertools import combinations_with_replacement
from typing import NamedTuple

import numpy as np

from ..errors import (
    InternalInconsistencyError,
    NotDisjointError,
    OmegaBoundExceededError,
    PreconditionError,
    TimeCapExceeded,
)
from ..models import INFINITE, OmegaValue, SVariantRecord, Verdict
from ..rings.core import FiniteRing
from ..rings.ideals import (
    Ideal,
    all_ideals,
    colon,
    ideal_power,
    ideal_product,
    radical,
)
from ..rings.multiplicative import MultSet

logger = logging.getLogger(__name__)

_deadline: ContextVar[float | None] = ContextVar("sabsorb_deadline", default=None)

POLL_EVERY = 1024


@contextmanager
def time_cap(seconds: float | None) -> Iterator[None]:
    """Bound the tuple searches run inside the block."""
    token = _deadline.set(None if seconds is None else time.monotonic() + seconds)
    try:
        yield
    finally:
        _deadline.reset(token)


def _poll() -> None:
    deadline = _deadline.get()
    if deadline is not None and time.monotonic() > deadline:
        raise TimeCapExceeded("time cap reached during tuple search")


def omega_bound(ring: FiniteRing) -> int:
    """Every proper ideal of a finite ring is n-absorbing for this n."""
    return max(1, int(math.floor(math.log2(ring.order))))


def _check_n(n: int) -> None:
    if n < 1:
        raise PreconditionError(f"n must be a positive integer, got {n}")


def _check_disjoint(ideal: Ideal, multset: MultSet) -> None:
    common = ideal.meets(multset.members)
    if common is not None:
        raise NotDisjointError(common)


# =============================================================================
# TUPLE SEARCH
# =============================================================================

def _scan(ring: FiniteRing, inside: Sequence[bool], absorbed: Sequence[bool],
          n: int) -> tuple[tuple[int, ...] | None, int]:
    """
    First (n+1)-multiset with product in ``inside`` whose n-subproducts all
    miss ``absorbed``; returns it (or None) and the number of tuples examined.
    """
    rows = ring.mul_rows
    one = ring.one
    examined = 0
    for combo in combinations_with_replacement(ring.associate_reps, n + 1):
        examined += 1
        if examined % POLL_EVERY == 0:
            _poll()
        prefix = [one]
        for x in combo:
            prefix.append(rows[prefix[-1]][x])
        if not inside[prefix[-1]]:
            continue
        suffix = one
        hit = False
        for j in range(n, -1, -1):
            if absorbed[rows[prefix[j]][suffix]]:
                hit = True
                break
            suffix = rows[suffix][combo[j]]
        if not hit:
            return combo, examined
    return None, examined


def _masks(ideal: Ideal, s: int | None = None) -> tuple[list[bool], list[bool]]:
    inside = ideal.mask().tolist()
    if s is None:
        return inside, inside
    return inside, colon(ideal, s).mask().tolist()


def is_n_absorbing(ideal: Ideal, n: int) -> Verdict:
    """n-absorbing test by exhaustive multiset scan."""
    _check_n(n)
    if not ideal.is_proper:
        raise PreconditionError("n-absorbing ideals are proper")
    started = time.perf_counter()
    inside, absorbed = _masks(ideal)
    bad, examined = _scan(ideal.ring, inside, absorbed, n)
    return Verdict(holds=bad is None, counterexample=bad, tuples_examined=examined,
                   elapsed=time.perf_counter() - started)


def is_associated(ideal: Ideal, s: int, n: int) -> Verdict:
    """The absorbing condition with the fixed multiplier ``s``."""
    _check_n(n)
    started = time.perf_counter()
    inside, absorbed = _masks(ideal, s)
    bad, examined = _scan(ideal.ring, inside, absorbed, n)
    return Verdict(holds=bad is None, witness_s=s if bad is None else None,
                   witnesses=(s,) if bad is None else (), counterexample=bad,
                   tuples_examined=examined, elapsed=time.perf_counter() - started)


def is_S_n_absorbing(ideal: Ideal, multset: MultSet, n: int,
                     all_witnesses: bool = False) -> Verdict:
    """
    Whether a single s in S works for every (n+1)-multiset.

    Reports the least witness, or every witness when ``all_witnesses``.
    """
    _check_n(n)
    _check_disjoint(ideal, multset)
    started = time.perf_counter()
    ring = ideal.ring
    inside = ideal.mask().tolist()

    t = multset.total_product
    bad, examined = _scan(ring, inside, colon(ideal, t).mask().tolist(), n)
    if bad is not None:
        return Verdict(holds=False, counterexample=bad, tuples_examined=examined,
                       elapsed=time.perf_counter() - started)

    seen: dict[frozenset[int], bool] = {}
    witnesses = []
    for s in multset:
        quotient = colon(ideal, s)
        if quotient.members not in seen:
            fails, count = _scan(ring, inside, quotient.mask().tolist(), n)
            examined += count
            seen[quotient.members] = fails is None
        if seen[quotient.members]:
            witnesses.append(s)
            if not all_witnesses:
                break
    return Verdict(holds=True, witness_s=witnesses[0], witnesses=tuple(witnesses),
                   tuples_examined=examined, elapsed=time.perf_counter() - started)


def is_S_n_absorbing_via_colon(ideal: Ideal, multset: MultSet, n: int) -> Verdict:
    """Same question through the colons: some I:s is n-absorbing."""
    _check_n(n)
    _check_disjoint(ideal, multset)
    examined = 0
    last = None
    for s in multset:
        verdict = is_n_absorbing(colon(ideal, s), n)
        examined += verdict.tuples_examined
        if verdict.holds:
            return Verdict(holds=True, witness_s=s, witnesses=(s,), tuples_examined=examined)
        last = verdict.counterexample
    return Verdict(holds=False, counterexample=last, tuples_examined=examined)


def is_S_n_absorbing_relaxed(ideal: Ideal, multset: MultSet, n: int) -> Verdict:
    """Per-tuple existential: every multiset has its own s."""
    _check_n(n)
    _check_disjoint(ideal, multset)
    ring = ideal.ring
    inside = ideal.mask()
    colons = [colon(ideal, s).mask() for s in multset]
    # a subproduct is absorbed by some s iff it lies in the union of colons
    absorbed = np.logical_or.reduce(colons).tolist()
    examined = 0
    for combo in combinations_with_replacement(ring.associate_reps, n + 1):
        examined += 1
        if examined % POLL_EVERY == 0:
            _poll()
        if not inside[ring.product(combo)]:
            continue
        subs = [ring.product(combo[:j] + combo[j + 1:]) for j in range(n + 1)]
        if not any(absorbed[x] for x in subs):
            return Verdict(holds=False, counterexample=combo, tuples_examined=examined)
    return Verdict(holds=True, tuples_examined=examined)


def replay_counterexample(ideal: Ideal, multset: MultSet, combo: Sequence[int]) -> bool:
    """True when ``combo`` violates the definition for every s and every omitted index."""
    ring = ideal.ring
    if ring.product(combo) not in ideal:
        return False
    for s in multset:
        for j in range(len(combo)):
            sub = ring.product(tuple(combo[:j]) + tuple(combo[j + 1:]))
            if ring.mul(s, sub) in ideal:
                return False
    return True


# =============================================================================
# OMEGA
# =============================================================================

def omega(ideal: Ideal, multset: MultSet) -> OmegaValue:
    """Least n making the ideal S-n-absorbing."""
    _check_disjoint(ideal, multset)
    bound = omega_bound(ideal.ring)
    for n in range(1, bound + 1):
        verdict = is_S_n_absorbing(ideal, multset, n)
        if verdict.holds:
            return OmegaValue(value=n, bound_used=bound, witness_s=verdict.witness_s)
    logger.error("omega bound %d exceeded for %r over %r", bound, ideal, multset)
    raise OmegaBoundExceededError(bound, INFINITE)


class OmegaTable(NamedTuple):
    values: dict[Ideal, OmegaValue]
    spectrum: frozenset[int]


def omega_table(ring: FiniteRing, multset: MultSet) -> OmegaTable:
    """ω for every proper ideal disjoint from S, and the set of attained values."""
    values: dict[Ideal, OmegaValue] = {}
    for ideal in all_ideals(ring):
        if not ideal.is_proper or ideal.meets(multset.members) is not None:
            continue
        values[ideal] = omega(ideal, multset)
    spectrum = frozenset(v.value for v in values.values() if isinstance(v.value, int))
    return OmegaTable(values, spectrum)


# =============================================================================
# S-PRIME, S-PRIMARY, STRONGLY S-PRIMARY
# =============================================================================

def _pair_scan(ideal: Ideal, first: Ideal, second: Ideal) -> tuple[int, int] | None:
    """First ordered pair (a, b) of representatives with ab in I, a outside ``first``, b outside ``second``."""
    reps = np.array(ideal.ring.associate_reps, dtype=np.int64)
    if reps.size == 0:
        return None
    products = ideal.mask()[ideal.ring.mul_table[np.ix_(reps, reps)]]
    failing = products & ~first.mask()[reps][:, None] & ~second.mask()[reps][None, :]
    found = np.argwhere(failing)
    if not found.size:
        return None
    a, b = found[0]
    return int(reps[a]), int(reps[b])


def _s_primary(ideal: Ideal, multset: MultSet) -> Verdict:
    root = radical(ideal)
    t = multset.total_product
    bad = _pair_scan(ideal, colon(ideal, t), colon(root, t))
    if bad is not None:
        return Verdict(holds=False, counterexample=bad)
    for s in multset:
        if _pair_scan(ideal, colon(ideal, s), colon(root, s)) is None:
            return Verdict(holds=True, witness_s=s, witnesses=(s,))
    raise InternalInconsistencyError("uniform witness lost between t and S")


def _strong_exponent(ideal: Ideal, multset: MultSet) -> tuple[int, int] | None:
    """Lexicographically least (n, t) with t·(√I)^n ⊆ I."""
    root = radical(ideal)
    for n in range(1, omega_bound(ideal.ring) + 1):
        power = ideal_power(root, n)
        for t in multset:
            if all(ideal.ring.mul(t, x) in ideal for x in power.members):
                return n, t
    return None


def s_variant_predicates(ideal: Ideal, multset: MultSet) -> SVariantRecord:
    _check_disjoint(ideal, multset)
    prime = is_S_n_absorbing(ideal, multset, 1)
    primary = _s_primary(ideal, multset)
    strong = _strong_exponent(ideal, multset) if primary.holds else None
    if strong is None:
        strongly = Verdict(holds=False, counterexample=primary.counterexample,
                           note=None if not primary.holds else "no t(√I)^n inside I")
    else:
        strongly = Verdict(holds=True, witness_s=strong[1], witnesses=(strong[1],))
    return SVariantRecord(S_prime=prime, S_primary=primary, strongly_S_primary=strongly,
                          strong_exponent=None if strong is None else strong[0])


# =============================================================================
# MINIMAL IDEALS AND COLON STABILIZATION
# =============================================================================

def minimal_s_n_absorbing_over(base: Ideal, multset: MultSet, n: int) -> list[Ideal]:
    """Inclusion-minimal S-n-absorbing ideals containing ``base``."""
    _check_disjoint(base, multset)
    found = [i for i in all_ideals(base.ring)
             if base <= i and i.meets(multset.members) is None
             and is_S_n_absorbing(i, multset, n).holds]
    minimal = [i for i in found if not any(j < i for j in found)]
    if not minimal:
        logger.warning("no S-%d-absorbing ideal over %r", n, base)
    return minimal


def colon_stabilization_check(ideal: Ideal, multset: MultSet, s: int | None = None,
                              n: int | None = None) -> Verdict:
    """Whether I:s^n = I:s^k for every k >= n, up to the ring order."""
    if s is None or n is None:
        value = omega(ideal, multset)
        s = value.witness_s if s is None else s
        n = int(value.value) if n is None else n
    if not is_associated(ideal, s, n).holds:
        raise PreconditionError(f"ideal is not {n}-absorbing associated to "
                                f"{ideal.ring.labels[s]}")
    ring = ideal.ring
    base = colon(ideal, ring.power(s, n))
    for k in range(n + 1, ring.order + 1):
        if colon(ideal, ring.power(s, k)) != base:
            return Verdict(holds=False, witness_s=s, counterexample=(s, k))
    return Verdict(holds=True, witness_s=s, witnesses=(s,))


def product_of_ideals(ideals: Sequence[Ideal]) -> Ideal:
    result = ideals[0]
    for other in ideals[1:]:
        result = ideal_product(result, other)
    return result

