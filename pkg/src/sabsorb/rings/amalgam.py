"""
Amalgamated algebras A ⋈^f J = {(a, f(a)+j) : a in A, j in J}.

The carrier is coded by pairs (a, j) and normalized to tables like every
other ring. Homomorphisms are unital, so the amalgamation always has the
identity (1, f(1)).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

import numpy as np

from ..classify.absorbing import is_associated, is_S_n_absorbing
from ..config import resolve_cap
from ..errors import CapacityError, InternalInconsistencyError, PreconditionError
from ..models import Verdict
from .core import AmalgamInfo, FiniteRing, RingHom, make_hom, make_product, make_subring
from .ideals import (
    Ideal,
    as_ideal,
    ideal_power,
    ideal_text,
    is_primary,
    maximal_ideals,
    prime_ideals,
    radical,
    zero_ideal,
)
from .multiplicative import MultSet

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Amalgamation:
    """A ⋈^f J with its projections and the subring f(A)+J of B."""

    A: FiniteRing
    B: FiniteRing
    f: RingHom
    J: Ideal
    ring: FiniteRing
    # pairs[k] = (a, b) with b = f(a) + j
    pairs: tuple[tuple[int, int], ...]

    @cached_property
    def _lookup(self) -> dict[tuple[int, int], int]:
        return {pair: k for k, pair in enumerate(self.pairs)}

    def index_of(self, a: int, b: int) -> int:
        try:
            return self._lookup[(a, b)]
        except KeyError:
            raise PreconditionError(f"({self.A.labels[a]},{self.B.labels[b]}) is not in "
                                    f"{self.ring.descriptor}") from None

    def lift(self, a: int) -> int:
        """(a, f(a))."""
        return self._lookup[(a, self.f(a))]

    def offset(self, k: int) -> int:
        """The j of element k = (a, f(a)+j)."""
        a, b = self.pairs[k]
        return self.B.sub(b, self.f(a))

    @cached_property
    def pi1(self) -> RingHom:
        return make_hom(self.ring, self.A, [a for a, _ in self.pairs], "pi1")

    @cached_property
    def pi2(self) -> RingHom:
        return make_hom(self.ring, self.B, [b for _, b in self.pairs], "pi2")

    @cached_property
    def inclusion(self) -> RingHom:
        """Into A × B."""
        target = make_product(self.A, self.B, cap=self.A.order * self.B.order)
        return make_hom(self.ring, target, [a * self.B.order + b for a, b in self.pairs],
                        "incl")

    @cached_property
    def subring(self) -> tuple[FiniteRing, RingHom]:
        """f(A) + J as a ring, with its inclusion into B."""
        members = {self.B.add(self.f(a), j) for a in range(self.A.order) for j in self.J.members}
        return make_subring(self.B, members, f"subring({self.B.descriptor})")

    def to_subring(self, b: int) -> int:
        """Index in f(A)+J of an element of B lying in it."""
        _, incl = self.subring
        return incl.table.index(b)

    def in_B(self, ideal: Ideal) -> frozenset[int]:
        """Members of an ideal of f(A)+J, in B coordinates."""
        _, incl = self.subring
        return incl.image(ideal.members)

    def image_mult_set(self, multset: MultSet) -> MultSet:
        """f(S) as a multiplicative subset of f(A)+J."""
        sub, _ = self.subring
        members = frozenset(self.to_subring(self.f(s)) for s in multset)
        return MultSet(sub, members, tuple(self.to_subring(self.f(g)) for g in multset.generators))

    @cached_property
    def kernel_pi1(self) -> frozenset[int]:
        """{0} × J."""
        return frozenset(k for k, (a, _) in enumerate(self.pairs) if a == self.A.zero)

    @cached_property
    def kernel_pi2(self) -> frozenset[int]:
        """f⁻¹(J) × {0}."""
        return frozenset(k for k, (_, b) in enumerate(self.pairs) if b == self.B.zero)


def amalgamate(A: FiniteRing, f: RingHom, J: Ideal, *, cap: int | None = None) -> Amalgamation:
    if f.source != A:
        raise PreconditionError("the homomorphism does not start at A")
    B = f.target
    if J.ring != B:
        raise PreconditionError("J is not an ideal of the target of f")
    order = A.order * len(J)
    limit = resolve_cap(cap)
    if order > limit:
        raise CapacityError(order, limit, "amalgamation")

    fa = np.array(f.table)
    js = np.array(sorted(J.members))
    ea = np.repeat(np.arange(A.order), js.size)
    eb = B.add_table[fa[ea], np.tile(js, A.order)]
    nb = B.order
    lookup = np.full(A.order * nb, -1)
    lookup[ea * nb + eb] = np.arange(order)

    def table(ta: np.ndarray, tb: np.ndarray) -> np.ndarray:
        return lookup[ta[ea[:, None], ea[None, :]] * nb + tb[eb[:, None], eb[None, :]]]

    add, mul = table(A.add_table, B.add_table), table(A.mul_table, B.mul_table)
    if (add < 0).any() or (mul < 0).any():
        raise InternalInconsistencyError("A ⋈^f J is not closed under the ring operations")

    pairs = tuple(zip(ea.tolist(), eb.tolist()))
    ring = FiniteRing(
        add_table=add,
        mul_table=mul,
        zero=int(lookup[A.zero * nb + B.zero]),
        one=int(lookup[A.one * nb + B.one]),
        descriptor=f"amalg({A.descriptor}, {f.descriptor}, {ideal_text(J)})",
        labels=tuple(f"({A.labels[a]},{B.labels[b]})" for a, b in pairs),
        construction=AmalgamInfo(A, B, pairs),
    )
    logger.debug("built %s (order %d)", ring.descriptor, order)
    return Amalgamation(A, B, f, J, ring, pairs)


def lift_mult_set(multset: MultSet, amal: Amalgamation) -> MultSet:
    """S^{⋈f} = {(s, f(s))}."""
    members = frozenset(amal.lift(s) for s in multset)
    return MultSet(amal.ring, members, tuple(amal.lift(g) for g in multset.generators))


class SpecialIdeals(NamedTuple):
    I_bowtie_J: Ideal
    K_bar: Ideal
    IxK_bar: Ideal
    I_bowtie_H: Ideal


def special_ideals(amal: Amalgamation, I: Ideal, K: Ideal | None = None,
                   H: Ideal | None = None) -> SpecialIdeals:
    """
    I⋈J, K̄, the contraction of I×K, and I⋈H.

    K and H are ideals of f(A)+J; they default to (0) and J.
    """
    sub, _ = amal.subring
    if I.ring != amal.A:
        raise PreconditionError("I is not an ideal of A")
    K = K if K is not None else zero_ideal(sub)
    H = H if H is not None else as_ideal(sub, {amal.to_subring(j) for j in amal.J.members})
    if K.ring != sub or H.ring != sub:
        raise PreconditionError("K and H must be ideals of f(A)+J")
    k_b, h_b = amal.in_B(K), amal.in_B(H)

    B, f = amal.B, amal.f
    if not h_b <= amal.J.members:
        raise PreconditionError("H is not contained in J")
    for i in I.members:
        for j in amal.J.members:
            if B.mul(f(i), j) not in h_b:
                raise PreconditionError(f"f(I)J is not inside H: f({amal.A.labels[i]})·"
                                        f"{B.labels[j]} is missing")

    pairs = amal.pairs
    ring = amal.ring

    def closed(name: str, members: set[int]) -> Ideal:
        try:
            return as_ideal(ring, members)
        except PreconditionError:
            raise InternalInconsistencyError(f"{name} is not an ideal of {ring.descriptor}") from None

    return SpecialIdeals(
        I_bowtie_J=closed("I⋈J", {k for k, (a, _) in enumerate(pairs) if a in I}),
        K_bar=closed("K̄", {k for k, (_, b) in enumerate(pairs) if b in k_b}),
        IxK_bar=closed("I×K", {k for k, (a, b) in enumerate(pairs) if a in I and b in k_b}),
        I_bowtie_H=closed("I⋈H", {k for k, (a, _) in enumerate(pairs)
                                  if a in I and amal.offset(k) in h_b}),
    )


# =============================================================================
# TRANSPORT CHECKS
# =============================================================================

def _disjoint(members: frozenset[int], others: frozenset[int]) -> bool:
    return not (members & others)


def check_amalgam_disjointness(amal: Amalgamation, I: Ideal, K: Ideal,
                               multset: MultSet) -> Verdict:
    """Disjointness of I, K from S, f(S) against the special ideals from S^{⋈f}."""
    lifted = lift_mult_set(multset, amal).members
    special = special_ideals(amal, I, K)
    f_s = frozenset(amal.f(s) for s in multset)
    k_b = amal.in_B(K)

    i_free = _disjoint(I.members, multset.members)
    k_free = _disjoint(k_b, f_s)
    failed = []
    if i_free != _disjoint(special.I_bowtie_J.members, lifted):
        failed.append("I⋈J")
    if k_free != _disjoint(special.K_bar.members, lifted):
        failed.append("K̄")
    if i_free and k_free and not _disjoint(special.IxK_bar.members, lifted):
        failed.append("I×K")
    if failed:
        return Verdict(holds=False, note="disjointness mismatch for " + ", ".join(failed))
    return Verdict(holds=True)


def check_amalgam_transport(amal: Amalgamation, I: Ideal, K: Ideal, multset: MultSet,
                            m: int, n: int) -> Verdict:
    """
    I vs I⋈J and K vs K̄ agree on being S-n-absorbing; S-m and f(S)-n
    absorbing I, K give an S-(m+n)-absorbing contraction of I×K.
    """
    if I.meets(multset.members) is not None:
        raise PreconditionError("I meets S")
    f_sub = amal.image_mult_set(multset)
    if K.meets(f_sub.members) is not None:
        raise PreconditionError("K meets f(S)")

    lifted = lift_mult_set(multset, amal)
    special = special_ideals(amal, I, K)
    examined = 0

    def holds(ideal: Ideal, mset: MultSet, k: int) -> bool:
        nonlocal examined
        verdict = is_S_n_absorbing(ideal, mset, k)
        examined += verdict.tuples_examined
        return verdict.holds

    failed = []
    if holds(I, multset, n) != holds(special.I_bowtie_J, lifted, n):
        failed.append("I⋈J")
    if holds(K, f_sub, n) != holds(special.K_bar, lifted, n):
        failed.append("K̄")
    if holds(I, multset, m) and holds(K, f_sub, n) and not holds(special.IxK_bar, lifted, m + n):
        failed.append("I×K")
    if failed:
        return Verdict(holds=False, tuples_examined=examined,
                       note="transport fails for " + ", ".join(failed))
    return Verdict(holds=True, tuples_examined=examined)


def local_maximal_ideal(amal: Amalgamation) -> Ideal:
    """Maximal ideal m of a local A, provided no prime of B outside V(J) pulls back to m."""
    A, B, f, J = amal.A, amal.B, amal.f, amal.J
    maximal = maximal_ideals(A)
    if len(maximal) != 1:
        raise PreconditionError(f"{A.descriptor} is not local")
    m = maximal[0]
    for q in prime_ideals(B):
        if not J <= q and f.preimage(q.members) == m.members:
            raise PreconditionError(f"f⁻¹({ideal_text(q)}) = m for a prime outside V(J)")
    return m


def local_amalgam_hypotheses(amal: Amalgamation, I: Ideal, H: Ideal, multset: MultSet,
                             s: int, n: int) -> Ideal:
    """Check the local-amalgam hypotheses; returns the maximal ideal of A."""
    A, B, f, J = amal.A, amal.B, amal.f, amal.J
    m = local_maximal_ideal(amal)
    if not (is_primary(I) and radical(I) == m):
        raise PreconditionError(f"{ideal_text(I)} is not m-primary")
    if any(B.mul(f(x), j) != B.zero for x in m.members for j in J.members):
        raise PreconditionError("f(m)J is not zero")
    if s not in multset:
        raise PreconditionError(f"{A.labels[s]} is not in S")
    if I.meets(multset.members) is not None:
        raise PreconditionError("I meets S")
    h_b = amal.in_B(H)
    if any(B.mul(f(s), x) not in h_b for x in ideal_power(J, n).members):
        raise PreconditionError(f"f(s)J^{n} is not inside H")
    return m


def verify_local_amalgam(amal: Amalgamation, I: Ideal, H: Ideal, multset: MultSet,
                         s: int, n: int) -> Verdict:
    """Radical identity, primary transport and the associated-to-s equivalence."""
    m = local_amalgam_hypotheses(amal, I, H, multset, s, n)
    bowtie_h = special_ideals(amal, I, H=H).I_bowtie_H
    m_bowtie_j = special_ideals(amal, m).I_bowtie_J

    failed = []
    if radical(bowtie_h) != m_bowtie_j:
        failed.append("radical identity")
    transported = is_primary(bowtie_h) and radical(bowtie_h) == m_bowtie_j
    if transported != (is_primary(I) and radical(I) == m):
        failed.append("primary transport")
    down = is_associated(I, s, n)
    up = is_associated(bowtie_h, amal.lift(s), n)
    if down.holds != up.holds:
        failed.append("associated-to-s equivalence")
    examined = down.tuples_examined + up.tuples_examined
    if failed:
        return Verdict(holds=False, witness_s=s, tuples_examined=examined,
                       counterexample=down.counterexample or up.counterexample,
                       note="; ".join(failed))
    return Verdict(holds=True, witness_s=s, witnesses=(s,), tuples_examined=examined)

