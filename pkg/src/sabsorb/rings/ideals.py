"""
Ideal lattice of a finite ring.

Ideals are membership sets over canonical element indices. The full lattice
is computed by closing the principal ideals under sums, which stays small even
when the power set of the ring is astronomically large.
"""
from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

import numpy as np

from ..config import resolve_cap
from ..errors import CapacityError, InternalInconsistencyError, NoPrimesError, PreconditionError
from .core import FiniteRing, ProductInfo, RingHom

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Ideal:
    """An ideal given by its members; generators are provenance only."""

    ring: FiniteRing
    members: frozenset[int]
    generators: tuple[int, ...] = ()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.members == other.members and self.ring == other.ring

    def __hash__(self) -> int:
        return hash(self.members)

    def __contains__(self, x: object) -> bool:
        return x in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __le__(self, other: Ideal) -> bool:
        return self.members <= other.members

    def __lt__(self, other: Ideal) -> bool:
        return self.members < other.members

    def __repr__(self) -> str:
        return f"Ideal({ideal_text(self)} of {self.ring.descriptor})"

    @property
    def is_proper(self) -> bool:
        return self.ring.one not in self.members

    @property
    def is_zero(self) -> bool:
        return len(self.members) == 1

    @property
    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return len(self.members), tuple(sorted(self.members))

    def mask(self) -> np.ndarray:
        out = np.zeros(self.ring.order, dtype=bool)
        out[list(self.members)] = True
        return out

    def meets(self, elements: Iterable[int]) -> int | None:
        """Least common element with ``elements``, if any."""
        common = self.members.intersection(elements)
        return min(common) if common else None


# =============================================================================
# CONSTRUCTION
# =============================================================================

def ideal_generated(ring: FiniteRing, gens: Iterable[int]) -> Ideal:
    gens = tuple(gens)
    for g in gens:
        if not 0 <= g < ring.order:
            raise PreconditionError(f"element {g} outside {ring.descriptor}")
    return Ideal(ring, ring.span(gens), gens)


def zero_ideal(ring: FiniteRing) -> Ideal:
    return Ideal(ring, frozenset({ring.zero}), ())


def unit_ideal(ring: FiniteRing) -> Ideal:
    return Ideal(ring, frozenset(range(ring.order)), (ring.one,))


def principal_ideal(ring: FiniteRing, a: int) -> Ideal:
    return Ideal(ring, frozenset(ring.mul_rows[a]), (a,))


def as_ideal(ring: FiniteRing, members: Iterable[int]) -> Ideal:
    """Wrap a member set known to be an ideal, checking closure."""
    members = frozenset(members)
    if ring.span(members) != members:
        raise PreconditionError(f"member set is not an ideal of {ring.descriptor}")
    return Ideal(ring, members, minimal_generators_of(ring, members))


@lru_cache(maxsize=64)
def all_ideals(ring: FiniteRing) -> tuple[Ideal, ...]:
    """Every ideal of ``ring``, sorted by (size, members)."""
    cap = resolve_cap(None)
    if ring.order > cap:
        raise CapacityError(ring.order, cap, "ideal lattice")

    principal: dict[frozenset[int], tuple[int, ...]] = {}
    for a in range(ring.order):
        principal.setdefault(frozenset(ring.mul_rows[a]), (a,))

    lattice = dict(principal)
    frontier = list(principal)
    while frontier:
        fresh = []
        for members in frontier:
            left = np.fromiter(members, dtype=np.int64)
            for other, gens in principal.items():
                if other <= members:
                    continue
                right = np.fromiter(other, dtype=np.int64)
                total = frozenset(np.unique(ring.add_table[np.ix_(left, right)]).tolist())
                if total not in lattice:
                    lattice[total] = lattice[members] + gens
                    fresh.append(total)
        frontier = fresh

    ideals = [Ideal(ring, m, g) for m, g in lattice.items()]
    ideals.sort(key=lambda i: i.sort_key)
    logger.debug("%s has %d ideals", ring.descriptor, len(ideals))
    return tuple(ideals)


def ideals_containing(ideal: Ideal) -> list[Ideal]:
    return [j for j in all_ideals(ideal.ring) if ideal <= j]


# =============================================================================
# ARITHMETIC
# =============================================================================

def colon(ideal: Ideal, divisor: int | Ideal) -> Ideal:
    """I:d for an element d, or {r : rJ ⊆ I} for an ideal J."""
    ring = ideal.ring
    inside = ideal.mask()
    if isinstance(divisor, Ideal):
        rows = ring.mul_table[sorted(divisor.members)]
        keep = inside[rows].all(axis=0)
    else:
        keep = inside[ring.mul_table[divisor]]
    return Ideal(ring, frozenset(np.flatnonzero(keep).tolist()))


def _eventual_powers(ring: FiniteRing) -> np.ndarray:
    # x^(2^k) with 2^k >= order lands in I iff some power of x does
    powers = np.arange(ring.order)
    steps = max(1, int(np.ceil(np.log2(ring.order))))
    for _ in range(steps):
        powers = ring.mul_table[powers, powers]
    return powers


def radical(ideal: Ideal) -> Ideal:
    inside = ideal.mask()
    keep = inside[_eventual_powers(ideal.ring)]
    return Ideal(ideal.ring, frozenset(np.flatnonzero(keep).tolist()))


def _same_ring(i: Ideal, j: Ideal) -> None:
    if i.ring != j.ring:
        raise PreconditionError("ideals live in different rings")


def ideal_sum(i: Ideal, j: Ideal) -> Ideal:
    _same_ring(i, j)
    table = i.ring.add_table[np.ix_(sorted(i.members), sorted(j.members))]
    return Ideal(i.ring, frozenset(np.unique(table).tolist()), i.generators + j.generators)


def ideal_product(i: Ideal, j: Ideal) -> Ideal:
    _same_ring(i, j)
    table = i.ring.mul_table[np.ix_(sorted(i.members), sorted(j.members))]
    return Ideal(i.ring, i.ring.span(np.unique(table).tolist()))


def ideal_intersection(i: Ideal, j: Ideal) -> Ideal:
    _same_ring(i, j)
    return Ideal(i.ring, i.members & j.members)


_COMBINERS = {
    "sum": ideal_sum,
    "product": ideal_product,
    "intersection": ideal_intersection,
}


def ideal_combine(op: Literal["sum", "product", "intersection"], i: Ideal, j: Ideal) -> Ideal:
    try:
        return _COMBINERS[op](i, j)
    except KeyError:
        raise PreconditionError(f"unknown ideal operation '{op}'") from None


def ideal_power(ideal: Ideal, k: int) -> Ideal:
    if k < 0:
        raise PreconditionError("ideal powers need k >= 0")
    result = unit_ideal(ideal.ring)
    for _ in range(k):
        result = ideal_product(result, ideal)
    return result


def comaximal(i: Ideal, j: Ideal) -> bool:
    return i.ring.one in ideal_sum(i, j)


# =============================================================================
# PRIMES, PRIMARY IDEALS, DECOMPOSITION
# =============================================================================

def _pair_violation(ideal: Ideal, left: np.ndarray, right: np.ndarray) -> tuple[int, int] | None:
    """First (a, b) with a in ``left``, b in ``right`` and ab in the ideal."""
    if left.size == 0 or right.size == 0:
        return None
    hits = ideal.mask()[ideal.ring.mul_table[np.ix_(left, right)]]
    found = np.argwhere(hits)
    if not found.size:
        return None
    a, b = found[0]
    return int(left[a]), int(right[b])


def _outside(ideal: Ideal) -> np.ndarray:
    return np.flatnonzero(~ideal.mask())


def is_prime(ideal: Ideal) -> bool:
    if not ideal.is_proper:
        return False
    outside = _outside(ideal)
    return _pair_violation(ideal, outside, outside) is None


def is_primary(ideal: Ideal) -> bool:
    if not ideal.is_proper:
        return False
    return _pair_violation(ideal, _outside(ideal), _outside(radical(ideal))) is None


def is_maximal(ideal: Ideal) -> bool:
    if not ideal.is_proper:
        return False
    return all(j == ideal or not j.is_proper
               for j in all_ideals(ideal.ring) if ideal <= j)


def prime_ideals(ring: FiniteRing) -> list[Ideal]:
    return [p for p in all_ideals(ring) if is_prime(p)]


def maximal_ideals(ring: FiniteRing) -> list[Ideal]:
    return [m for m in all_ideals(ring) if is_maximal(m)]


def _minimal(ideals: list[Ideal]) -> list[Ideal]:
    return [p for p in ideals if not any(q < p for q in ideals)]


def minimal_primes(ideal: Ideal) -> list[Ideal]:
    """Primes over ``ideal`` containing no smaller prime over it."""
    if not ideal.is_proper:
        raise NoPrimesError(f"the unit ideal of {ideal.ring.descriptor} has no primes over it")
    return _minimal([p for p in prime_ideals(ideal.ring) if ideal <= p])


def primary_decomposition(ideal: Ideal) -> list[Ideal]:
    """
    An irredundant list of primary ideals intersecting to ``ideal``.

    Candidates are scanned smallest-first; a candidate is kept whenever it
    shrinks the running intersection, then redundant components are pruned.
    """
    if not ideal.is_proper:
        raise PreconditionError("primary decomposition needs a proper ideal")
    candidates = [q for q in ideals_containing(ideal) if is_primary(q)]
    components: list[Ideal] = []
    current = frozenset(range(ideal.ring.order))
    for q in candidates:
        if current == ideal.members:
            break
        if not current <= q.members:
            components.append(q)
            current = current & q.members
    if current != ideal.members:
        raise InternalInconsistencyError(f"no primary decomposition found for {ideal!r}")

    for q in list(components):
        rest = [c for c in components if c is not q]
        if rest and frozenset.intersection(*(c.members for c in rest)) == ideal.members:
            components = rest
    return components


# =============================================================================
# TRANSPORT AND GENERATORS
# =============================================================================

def image_ideal(hom: RingHom, ideal: Ideal) -> Ideal:
    """Ideal of the target generated by the image."""
    return ideal_generated(hom.target, sorted(hom.image(ideal.members)))


def preimage_ideal(hom: RingHom, ideal: Ideal) -> Ideal:
    return Ideal(hom.source, hom.preimage(ideal.members))


def minimal_generators_of(ring: FiniteRing, members: frozenset[int]) -> tuple[int, ...]:
    # least single generator when principal, else greedy ascending
    ordered = sorted(members)
    if members == {ring.zero}:
        return ()
    for a in ordered:
        if frozenset(ring.mul_rows[a]) == members:
            return (a,)
    gens: list[int] = []
    current: frozenset[int] = frozenset({ring.zero})
    for a in ordered:
        if a not in current:
            gens.append(a)
            current = ring.span(gens)
            if current == members:
                break
    return tuple(gens)


def minimal_generators(ideal: Ideal) -> tuple[int, ...]:
    return minimal_generators_of(ideal.ring, ideal.members)


def ideal_text(ideal: Ideal) -> str:
    labels = ideal.ring.labels
    return f"ideal({','.join(labels[g] for g in minimal_generators(ideal))})"


def product_ideal(ring: FiniteRing, left: Ideal, right: Ideal) -> Ideal:
    """I₁ × I₂ inside a product ring."""
    info = ring.construction
    if not isinstance(info, ProductInfo):
        raise PreconditionError(f"{ring.descriptor} is not a product ring")
    if left.ring != info.left or right.ring != info.right:
        raise PreconditionError("factor ideals do not match the product's factors")
    n2 = info.right.order
    return Ideal(ring, frozenset(a * n2 + b for a in left.members for b in right.members))


def divided_violation(ideal: Ideal) -> int | None:
    """Least a outside the ideal with I ⊄ aR, or None when I is divided."""
    ring = ideal.ring
    for a in sorted(set(range(ring.order)) - ideal.members):
        if not ideal.members <= set(ring.mul_rows[a]):
            return a
    return None


def is_divided(ideal: Ideal) -> bool:
    return divided_violation(ideal) is None
