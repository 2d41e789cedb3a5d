"""
Finite commutative rings with identity, normalized to dense operation tables.

Every constructor compiles its ring to numpy addition/multiplication tables
over canonical element indices 0..order-1. Downstream decision procedures only
ever do table lookups.
"""
from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from ..config import resolve_cap
from ..errors import (
    CapacityError,
    HomomorphismError,
    InvalidOrderError,
    PreconditionError,
    UnsupportedModulusError,
)

logger = logging.getLogger(__name__)


# =============================================================================
# CONSTRUCTION RECORDS
# =============================================================================

@dataclass(frozen=True)
class ZmodInfo:
    n: int


@dataclass(frozen=True, eq=False)
class ProductInfo:
    left: FiniteRing
    right: FiniteRing


@dataclass(frozen=True, eq=False)
class PolyInfo:
    base: FiniteRing
    var: str
    modulus: tuple[int, ...]
    # coefficient tuple (constant term first) of every element
    coeffs: tuple[tuple[int, ...], ...]


@dataclass(frozen=True, eq=False)
class QuotientInfo:
    parent: FiniteRing
    # projection[x] = index of the coset of parent element x
    projection: tuple[int, ...]


@dataclass(frozen=True, eq=False)
class SubringInfo:
    parent: FiniteRing
    # members[k] = parent index of subring element k
    members: tuple[int, ...]


@dataclass(frozen=True, eq=False)
class AmalgamInfo:
    left: FiniteRing
    right: FiniteRing
    # pairs[k] = (a, b) with a in left and b in right
    pairs: tuple[tuple[int, int], ...]


# =============================================================================
# RING
# =============================================================================

@dataclass(frozen=True, eq=False)
class FiniteRing:
    """A finite commutative ring with identity given by its operation tables."""

    add_table: np.ndarray
    mul_table: np.ndarray
    zero: int
    one: int
    descriptor: str
    labels: tuple[str, ...]
    construction: object = None

    def __post_init__(self) -> None:
        self.add_table.setflags(write=False)
        self.mul_table.setflags(write=False)

    def __repr__(self) -> str:
        return f"FiniteRing({self.descriptor}, order={self.order})"

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, FiniteRing):
            return NotImplemented
        return (self.order == other.order and self.zero == other.zero
                and self.one == other.one
                and np.array_equal(self.add_table, other.add_table)
                and np.array_equal(self.mul_table, other.mul_table))

    def __hash__(self) -> int:
        return self._fingerprint

    @cached_property
    def _fingerprint(self) -> int:
        return hash((self.order, self.add_table.tobytes(), self.mul_table.tobytes()))

    # --- sizes and fast tables -------------------------------------------------

    @property
    def order(self) -> int:
        return int(self.add_table.shape[0])

    @cached_property
    def mul_rows(self) -> list[list[int]]:
        return self.mul_table.tolist()

    @cached_property
    def add_rows(self) -> list[list[int]]:
        return self.add_table.tolist()

    @cached_property
    def negation(self) -> tuple[int, ...]:
        return tuple(np.argmax(self.add_table == self.zero, axis=1).tolist())

    @cached_property
    def label_index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def index_of(self, label: str) -> int:
        return self.label_index[label]

    # --- structural metadata ---------------------------------------------------

    @cached_property
    def units(self) -> frozenset[int]:
        mask = (self.mul_table == self.one).any(axis=1)
        return frozenset(np.flatnonzero(mask).tolist())

    @cached_property
    def nonunits(self) -> tuple[int, ...]:
        return tuple(x for x in range(self.order) if x not in self.units)

    @cached_property
    def nilpotents(self) -> frozenset[int]:
        # x^(2^k) with 2^k >= order
        powers = np.arange(self.order)
        for _ in range(max(1, math.ceil(math.log2(self.order)))):
            powers = self.mul_table[powers, powers]
        return frozenset(np.flatnonzero(powers == self.zero).tolist())

    @cached_property
    def jacobson_nilpotency(self) -> int:
        # J(R) is the nilradical for a finite ring
        radical = sorted(self.nilpotents)
        current = frozenset(radical)
        t = 1
        while current != {self.zero}:
            products = {self.mul_rows[p][j] for p in current for j in radical}
            current = self.span(products)
            t += 1
        return t

    @cached_property
    def associate_reps(self) -> tuple[int, ...]:
        """Least index of each orbit {u*x : u unit} among nonunits."""
        if not self.nonunits:
            return ()
        units = np.array(sorted(self.units))
        orbit_min = self.mul_table[units, :].min(axis=0)
        return tuple(sorted(set(orbit_min[list(self.nonunits)].tolist())))

    @property
    def is_field(self) -> bool:
        return len(self.units) == self.order - 1

    # --- arithmetic ------------------------------------------------------------

    def add(self, x: int, y: int) -> int:
        return self.add_rows[x][y]

    def mul(self, x: int, y: int) -> int:
        return self.mul_rows[x][y]

    def neg(self, x: int) -> int:
        return self.negation[x]

    def sub(self, x: int, y: int) -> int:
        return self.add_rows[x][self.negation[y]]

    def power(self, x: int, k: int) -> int:
        result, base = self.one, x
        while k:
            if k & 1:
                result = self.mul_rows[result][base]
            base = self.mul_rows[base][base]
            k >>= 1
        return result

    def product(self, xs: Iterable[int]) -> int:
        result = self.one
        for x in xs:
            result = self.mul_rows[result][x]
        return result

    def element(self, index: int) -> RingElement:
        return RingElement(self, index)

    def span(self, gens: Iterable[int]) -> frozenset[int]:
        """Members of the ideal generated by ``gens``."""
        current = np.array([self.zero])
        for g in sorted(set(gens)):
            principal = np.unique(self.mul_table[g])
            current = np.unique(self.add_table[np.ix_(current, principal)])
        return frozenset(current.tolist())

    def check_axioms(self) -> tuple[str, tuple[int, ...]] | None:
        """First violated ring law as (law, witness tuple), or None."""
        add, mul = self.add_table, self.mul_table
        idx = np.arange(self.order)
        for name, table in (("additive commutativity", add),
                            ("multiplicative commutativity", mul)):
            bad = np.argwhere(table != table.T)
            if bad.size:
                return name, tuple(bad[0].tolist())
        if not np.array_equal(add[self.zero], idx):
            return "additive identity", (int(np.flatnonzero(add[self.zero] != idx)[0]),)
        if not np.array_equal(mul[self.one], idx):
            return "multiplicative identity", (int(np.flatnonzero(mul[self.one] != idx)[0]),)
        if set(self.negation) != set(range(self.order)) or any(
                add[x, self.negation[x]] != self.zero for x in range(self.order)):
            return "additive inverses", ()
        for a in range(self.order):
            for name, table in (("additive associativity", add),
                                ("multiplicative associativity", mul)):
                lhs = table[table[a][:, None], idx[None, :]]
                rhs = table[a][table]
                bad = np.argwhere(lhs != rhs)
                if bad.size:
                    return name, (a, *bad[0].tolist())
            lhs = mul[a][add]
            rhs = add[mul[a][:, None], mul[a][None, :]]
            bad = np.argwhere(lhs != rhs)
            if bad.size:
                return "distributivity", (a, *bad[0].tolist())
        return None


@dataclass(frozen=True)
class RingElement:
    """An element of a FiniteRing, with operator sugar."""

    ring: FiniteRing
    index: int

    def __post_init__(self) -> None:
        if not 0 <= self.index < self.ring.order:
            raise PreconditionError(f"index {self.index} outside ring of order {self.ring.order}")

    def _other(self, other: RingElement | int) -> int:
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise PreconditionError("arithmetic between elements of different rings")
            return other.index
        return int(other)

    def __add__(self, other: RingElement | int) -> RingElement:
        return RingElement(self.ring, self.ring.add(self.index, self._other(other)))

    def __sub__(self, other: RingElement | int) -> RingElement:
        return RingElement(self.ring, self.ring.sub(self.index, self._other(other)))

    def __mul__(self, other: RingElement | int) -> RingElement:
        return RingElement(self.ring, self.ring.mul(self.index, self._other(other)))

    def __neg__(self) -> RingElement:
        return RingElement(self.ring, self.ring.neg(self.index))

    def __pow__(self, k: int) -> RingElement:
        return RingElement(self.ring, self.ring.power(self.index, k))

    def __str__(self) -> str:
        return self.ring.labels[self.index]

    @property
    def is_unit(self) -> bool:
        return self.index in self.ring.units


# =============================================================================
# HOMOMORPHISMS
# =============================================================================

@dataclass(frozen=True, eq=False)
class RingHom:
    """A validated unital ring homomorphism stored as an index table."""

    source: FiniteRing
    target: FiniteRing
    table: tuple[int, ...]
    descriptor: str = "table"

    def __call__(self, x: int) -> int:
        return self.table[x]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingHom):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.table == other.table)

    def __hash__(self) -> int:
        return hash(self.table)

    def image(self, members: Iterable[int]) -> frozenset[int]:
        return frozenset(self.table[x] for x in members)

    def preimage(self, members: Iterable[int]) -> frozenset[int]:
        wanted = set(members)
        return frozenset(x for x, y in enumerate(self.table) if y in wanted)

    @cached_property
    def kernel(self) -> frozenset[int]:
        return self.preimage({self.target.zero})

    @property
    def is_surjective(self) -> bool:
        return len(set(self.table)) == self.target.order

    @property
    def is_injective(self) -> bool:
        return len(set(self.table)) == self.source.order

    def compose(self, after: RingHom) -> RingHom:
        """``after`` ∘ ``self``."""
        return RingHom(self.source, after.target,
                       tuple(after.table[y] for y in self.table),
                       f"{after.descriptor}∘{self.descriptor}")


def make_hom(source: FiniteRing, target: FiniteRing, images: Sequence[int],
             descriptor: str = "table") -> RingHom:
    """Validate ``images`` as a unital ring homomorphism source → target."""
    table = np.asarray(list(images), dtype=np.int64)
    if table.shape != (source.order,):
        raise HomomorphismError(f"totality (table has {table.size} entries, "
                                f"need {source.order})")
    if table.size and (table.min() < 0 or table.max() >= target.order):
        raise HomomorphismError("range", (int(np.argmax((table < 0) | (table >= target.order))),))
    if table[source.one] != target.one:
        raise HomomorphismError("unitality", (source.one,))
    for law, src, tgt in (("additivity", source.add_table, target.add_table),
                          ("multiplicativity", source.mul_table, target.mul_table)):
        lhs = table[src]
        rhs = tgt[table[:, None], table[None, :]]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            raise HomomorphismError(law, tuple(bad[0].tolist()))
    return RingHom(source, target, tuple(table.tolist()), descriptor)


def identity_hom(ring: FiniteRing) -> RingHom:
    return RingHom(ring, ring, tuple(range(ring.order)), "id")


# =============================================================================
# CONSTRUCTORS
# =============================================================================

def _check_cap(order: int, cap: int | None, what: str = "ring") -> None:
    limit = resolve_cap(cap)
    if order > limit:
        raise CapacityError(order, limit, what)


def make_zmod(n: int, *, cap: int | None = None) -> FiniteRing:
    """Z/n with canonical indices 0..n-1."""
    if n < 2:
        raise InvalidOrderError(f"Z/n needs n >= 2, got {n}")
    _check_cap(n, cap)
    a = np.arange(n)
    ring = FiniteRing(
        add_table=(a[:, None] + a[None, :]) % n,
        mul_table=(a[:, None] * a[None, :]) % n,
        zero=0,
        one=1,
        descriptor=f"Z/{n}",
        labels=tuple(str(i) for i in range(n)),
        construction=ZmodInfo(n),
    )
    logger.debug("built %s", ring.descriptor)
    return ring


def make_product(r1: FiniteRing, r2: FiniteRing, *, cap: int | None = None) -> FiniteRing:
    """Componentwise product; the pair (a, b) has index a*|r2| + b."""
    n2 = r2.order
    order = r1.order * n2
    _check_cap(order, cap)
    idx = np.arange(order)
    a, b = idx // n2, idx % n2
    add = r1.add_table[a[:, None], a[None, :]] * n2 + r2.add_table[b[:, None], b[None, :]]
    mul = r1.mul_table[a[:, None], a[None, :]] * n2 + r2.mul_table[b[:, None], b[None, :]]
    ring = FiniteRing(
        add_table=add,
        mul_table=mul,
        zero=r1.zero * n2 + r2.zero,
        one=r1.one * n2 + r2.one,
        descriptor=f"product({r1.descriptor}, {r2.descriptor})",
        labels=tuple(f"({r1.labels[x // n2]},{r2.labels[x % n2]})" for x in range(order)),
        construction=ProductInfo(r1, r2),
    )
    logger.debug("built %s (order %d)", ring.descriptor, order)
    return ring


def pair_index(ring: FiniteRing, a: int, b: int) -> int:
    info = ring.construction
    if not isinstance(info, ProductInfo):
        raise PreconditionError(f"{ring.descriptor} is not a product ring")
    return a * info.right.order + b


def projections(ring: FiniteRing) -> tuple[RingHom, RingHom]:
    """Canonical projections of a product ring onto its two factors."""
    info = ring.construction
    if not isinstance(info, ProductInfo):
        raise PreconditionError(f"{ring.descriptor} is not a product ring")
    n2 = info.right.order
    left = make_hom(ring, info.left, [x // n2 for x in range(ring.order)], "pi1")
    right = make_hom(ring, info.right, [x % n2 for x in range(ring.order)], "pi2")
    return left, right


def format_poly(coeffs: Sequence[int], var: str = "x") -> str:
    """Render coefficients (constant term first) as ``2*x^2+3``."""
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
            continue
        mono = var if k == 1 else f"{var}^{k}"
        terms.append(mono if c == 1 else f"{c}*{mono}")
    return "+".join(terms) if terms else "0"


def check_poly_degree(base: FiniteRing, degree: int, var: str = "x", *,
                      cap: int | None = None) -> int:
    """Order n**degree of Z/n[var]/(g), rejected against the cap before it is computed."""
    info = base.construction
    if not isinstance(info, ZmodInfo):
        raise UnsupportedModulusError(f"polynomial quotients need a Z/n base, got {base.descriptor}")
    if degree < 1:
        raise UnsupportedModulusError("modulus must have degree >= 1")
    limit = resolve_cap(cap)
    n, top, size = info.n, 0, 1
    while size * info.n <= limit:
        size *= n
        top += 1
    if degree > top:
        raise CapacityError(None, limit, f"{base.descriptor}[{var}] quotient of degree {degree}")
    return n ** degree


def make_poly_quotient(base: FiniteRing, modulus: Sequence[int], var: str = "x", *,
                       cap: int | None = None) -> FiniteRing:
    """
    Z/n[var]/(modulus) for a monic modulus given constant term first.

    Elements are coefficient vectors of degree < d; the vector c has index
    sum(c[i] * n**i).
    """
    order = check_poly_degree(base, len(modulus) - 1, var, cap=cap)
    n = base.order
    mod = [int(c) % n for c in modulus]
    d = len(mod) - 1
    if mod[-1] != 1:
        raise UnsupportedModulusError(f"modulus {format_poly(mod, var)} is not monic over Z/{n}")

    weights = n ** np.arange(d)
    coeffs = (np.arange(order)[:, None] // weights[None, :]) % n

    # multiplication by var, as a matrix acting on coefficient columns
    shift = np.zeros((d, d), dtype=np.int64)
    for i in range(1, d):
        shift[i, i - 1] = 1
    shift[:, d - 1] -= np.array(mod[:d])
    shift %= n

    stacked = np.empty((d, order, d), dtype=np.int64)
    stacked[0] = coeffs
    for i in range(1, d):
        stacked[i] = (stacked[i - 1] @ shift.T) % n

    prod = np.einsum("ai,ibk->abk", coeffs, stacked) % n
    total = (coeffs[:, None, :] + coeffs[None, :, :]) % n

    ring = FiniteRing(
        add_table=total @ weights,
        mul_table=prod @ weights,
        zero=0,
        one=1,
        descriptor=f"{base.descriptor}[{var}]/({format_poly(mod, var)})",
        labels=tuple(format_poly(row, var) for row in coeffs.tolist()),
        construction=PolyInfo(base, var, tuple(mod), tuple(map(tuple, coeffs.tolist()))),
    )
    logger.debug("built %s (order %d)", ring.descriptor, order)
    return ring


def constant_embedding(ring: FiniteRing) -> RingHom:
    """Z/n → Z/n[x]/(g), c ↦ c."""
    info = ring.construction
    if not isinstance(info, PolyInfo):
        raise PreconditionError(f"{ring.descriptor} is not a polynomial quotient")
    return make_hom(info.base, ring, list(range(info.base.order)), "const")


def make_subring(parent: FiniteRing, members: Iterable[int],
                 descriptor: str | None = None) -> tuple[FiniteRing, RingHom]:
    """Materialize a subring of ``parent`` together with its inclusion."""
    elems = sorted(set(members))
    position = {x: k for k, x in enumerate(elems)}
    if parent.one not in position or parent.zero not in position:
        raise PreconditionError("a subring must contain zero and one")
    sub = np.array(elems)
    add = parent.add_table[np.ix_(sub, sub)]
    mul = parent.mul_table[np.ix_(sub, sub)]
    if not (np.isin(add, sub).all() and np.isin(mul, sub).all()):
        raise PreconditionError("member set is not closed under the ring operations")
    lookup = np.full(parent.order, -1)
    lookup[sub] = np.arange(len(elems))
    ring = FiniteRing(
        add_table=lookup[add],
        mul_table=lookup[mul],
        zero=position[parent.zero],
        one=position[parent.one],
        descriptor=descriptor or f"subring({parent.descriptor})",
        labels=tuple(parent.labels[x] for x in elems),
        construction=SubringInfo(parent, tuple(elems)),
    )
    return ring, RingHom(ring, parent, tuple(elems), "incl")
