"""
Multiplicative subsets, saturation and localization.

A finite localization R_S is realized as the quotient R/K with
K = {x : sx = 0 for some s in S}: multiplication by a member of S is
injective on R/K, hence bijective, so every member becomes a unit.
"""
from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from ..errors import (
    InternalInconsistencyError,
    LocalizationIsZeroError,
    NotDisjointError,
    PreconditionError,
)
from ..models import Verdict
from .core import FiniteRing, ProductInfo, RingHom
from .ideals import Ideal, colon, is_prime, zero_ideal
from .quotient import make_quotient

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class MultSet:
    """A multiplicatively closed subset; 1 is optional."""

    ring: FiniteRing
    members: frozenset[int]
    generators: tuple[int, ...] = ()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultSet):
            return NotImplemented
        return self.members == other.members and self.ring == other.ring

    def __hash__(self) -> int:
        return hash(self.members)

    def __contains__(self, x: object) -> bool:
        return x in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __repr__(self) -> str:
        labels = ", ".join(self.ring.labels[x] for x in self)
        return f"MultSet({{{labels}}} of {self.ring.descriptor})"

    @property
    def contains_one(self) -> bool:
        return self.ring.one in self.members

    @property
    def contains_zero(self) -> bool:
        return self.ring.zero in self.members

    @property
    def total_product(self) -> int:
        """Product of every member; a uniform witness whenever any member is."""
        return self.ring.product(sorted(self.members))


def _check_disjoint(ideal: Ideal, multset: MultSet) -> None:
    common = ideal.meets(multset.members)
    if common is not None:
        raise NotDisjointError(common)


# =============================================================================
# CONSTRUCTION
# =============================================================================

def mult_closure(ring: FiniteRing, gens: Iterable[int], include_one: bool = True) -> MultSet:
    gens = tuple(dict.fromkeys(gens))
    if not gens and not include_one:
        raise PreconditionError("an empty multiplicative set was requested")
    members = set(gens)
    frontier = list(gens)
    while frontier:
        fresh = []
        for x in frontier:
            for g in gens:
                y = ring.mul_rows[x][g]
                if y not in members:
                    members.add(y)
                    fresh.append(y)
        frontier = fresh
    if include_one:
        members.add(ring.one)
    return MultSet(ring, frozenset(members), gens)


def units_mult_set(ring: FiniteRing) -> MultSet:
    return MultSet(ring, ring.units, tuple(sorted(ring.units)))


def trivial_mult_set(ring: FiniteRing) -> MultSet:
    return MultSet(ring, frozenset({ring.one}), (ring.one,))


def complement_mult_set(prime: Ideal) -> MultSet:
    """R∖P for a prime P."""
    if not is_prime(prime):
        raise PreconditionError("the complement of a non-prime ideal is not multiplicative")
    rest = frozenset(range(prime.ring.order)) - prime.members
    return MultSet(prime.ring, rest, tuple(sorted(rest)))


def image_mult_set(multset: MultSet, hom: RingHom) -> MultSet:
    """φ(S); the image of a multiplicatively closed set is closed."""
    image = hom.image(multset.members)
    return MultSet(hom.target, image, tuple(dict.fromkeys(hom(g) for g in multset.generators)))


def mult_product(s1: MultSet, s2: MultSet) -> MultSet:
    """S₁S₂ = {ab : a in S₁, b in S₂}."""
    if s1.ring != s2.ring:
        raise PreconditionError("multiplicative sets live in different rings")
    ring = s1.ring
    members = frozenset(ring.mul_rows[a][b] for a in s1.members for b in s2.members)
    return mult_closure(ring, sorted(members), include_one=ring.one in members)


def product_mult_set(ring: FiniteRing, s1: MultSet, s2: MultSet) -> MultSet:
    """S₁ × S₂ inside a product ring."""
    info = ring.construction
    if not isinstance(info, ProductInfo):
        raise PreconditionError(f"{ring.descriptor} is not a product ring")
    n2 = info.right.order
    members = frozenset(a * n2 + b for a in s1.members for b in s2.members)
    return MultSet(ring, members, tuple(sorted(members)))


# =============================================================================
# SATURATION
# =============================================================================

def saturate_multset(multset: MultSet) -> MultSet:
    """All divisors of members: {x : xy in S for some y}."""
    ring = multset.ring
    inside = np.zeros(ring.order, dtype=bool)
    inside[list(multset.members)] = True
    keep = inside[ring.mul_table].any(axis=1)
    return MultSet(ring, frozenset(np.flatnonzero(keep).tolist()), multset.generators)


def is_strongly_multiplicative(multset: MultSet) -> Verdict:
    """Whether the intersection of all sR (s in S) meets S."""
    ring = multset.ring
    common = frozenset(range(ring.order))
    for s in multset:
        common &= frozenset(ring.mul_rows[s])
    hits = sorted(common & multset.members)
    if hits:
        return Verdict(holds=True, witness_s=hits[0], witnesses=(hits[0],))
    return Verdict(holds=False, counterexample=tuple(multset))


def sat_ideal(ideal: Ideal, multset: MultSet) -> tuple[Ideal, int]:
    """Sat_S(I) as the union of the colons I:s, plus t = ∏S with Sat_S(I) = I:t."""
    _check_disjoint(ideal, multset)
    members: set[int] = set()
    for s in multset:
        members |= colon(ideal, s).members
    return Ideal(ideal.ring, frozenset(members)), multset.total_product


# =============================================================================
# LOCALIZATION
# =============================================================================

class Localization(NamedTuple):
    ring: FiniteRing
    canonical: RingHom
    kernel: Ideal
    multset: MultSet


def localize(ring: FiniteRing, multset: MultSet) -> Localization:
    if multset.contains_zero:
        raise LocalizationIsZeroError(f"{multset!r} contains zero")
    kernel, _ = sat_ideal(zero_ideal(ring), multset)
    local, canonical = make_quotient(ring, kernel)
    for s in multset:
        if canonical(s) not in local.units:
            logger.error("image of %s is not a unit in %s", ring.labels[s], local.descriptor)
            raise InternalInconsistencyError(f"localization failed to invert {ring.labels[s]}")
    return Localization(local, canonical, kernel, multset)


def contract_ideal(ideal: Ideal, loc: Localization) -> Ideal:
    return Ideal(loc.canonical.source, loc.canonical.preimage(ideal.members))


def extend_ideal(ideal: Ideal, loc: Localization) -> Ideal:
    """IR_S; its contraction is checked against Sat_S(I)."""
    # the image of an ideal under a surjection is an ideal
    extended = Ideal(loc.ring, loc.canonical.image(ideal.members))
    contracted = contract_ideal(extended, loc)
    if ideal.meets(loc.multset.members) is None:
        expected, _ = sat_ideal(ideal, loc.multset)
    else:
        expected = Ideal(ideal.ring, frozenset(range(ideal.ring.order)))
    if contracted != expected:
        logger.error("contraction of IR_S differs from Sat_S(I) for %r", ideal)
        raise InternalInconsistencyError("contraction of IR_S differs from Sat_S(I)")
    return extended
