"""
Registered law checks.

Each check turns a corpus into instances. An instance's ``run`` returns None
when the law holds, a failure detail string when it does not, or a Finding
for search-style checks that report what they found without failing. Raising
Skip marks the instance as not applicable.
"""
from __future__ import annotations

from collections.abc import Callable, Iterator
from dataclasses import dataclass
from functools import partial, reduce
from itertools import combinations

import numpy as np

from ..classify.absorbing import (
    colon_stabilization_check,
    is_associated,
    is_n_absorbing,
    is_S_n_absorbing_relaxed,
    is_S_n_absorbing_via_colon,
    minimal_s_n_absorbing_over,
    omega_table,
    product_of_ideals,
    s_variant_predicates,
)
from ..classify.ring_classes import arithmetical_verdict, chained_verdict, distributivity_verdict
from ..dsl import render
from ..errors import PreconditionError, UnknownCheckError
from ..models import CheckSummary
from ..rings.amalgam import (
    Amalgamation,
    check_amalgam_disjointness,
    check_amalgam_transport,
    lift_mult_set,
    local_maximal_ideal,
    special_ideals,
    verify_local_amalgam,
)
from ..rings.core import FiniteRing, PolyInfo, ProductInfo, RingHom, constant_embedding
from ..rings.ideals import (
    Ideal,
    all_ideals,
    as_ideal,
    colon,
    comaximal,
    ideal_intersection,
    ideal_power,
    ideal_product,
    image_ideal,
    is_primary,
    minimal_primes,
    preimage_ideal,
    primary_decomposition,
    product_ideal,
    radical,
    zero_ideal,
)
from ..rings.multiplicative import (
    MultSet,
    extend_ideal,
    image_mult_set,
    is_strongly_multiplicative,
    mult_product,
    product_mult_set,
    sat_ideal,
    saturate_multset,
    trivial_mult_set,
)
from ..rings.quotient import make_quotient
from .corpus import Corpus, CorpusEntry


class Skip(Exception):
    """The instance does not meet the check's hypotheses."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


@dataclass(frozen=True)
class Finding:
    """A passing outcome worth reporting."""
    text: str


Result = str | Finding | None


@dataclass(frozen=True)
class Instance:
    key: str
    run: Callable[[], Result]
    replay: str | None = None


@dataclass(frozen=True)
class Check:
    slug: str
    title: str
    instances: Callable[[Corpus], Iterator[Instance]]
    summarize: Callable[[CheckSummary, list[str]], str | None] | None = None


REGISTRY: dict[str, Check] = {}


def register(slug: str, title: str,
             summarize: Callable[[CheckSummary, list[str]], str | None] | None = None):
    def decorator(fn: Callable[[Corpus], Iterator[Instance]]):
        REGISTRY[slug] = Check(slug, title, fn, summarize)
        return fn
    return decorator


def get_check(slug: str) -> Check:
    if slug not in REGISTRY:
        raise UnknownCheckError(slug, tuple(REGISTRY))
    return REGISTRY[slug]


def resolve(prop: str) -> list[Check]:
    """``all`` or a comma-separated list of slugs."""
    if prop.strip() == "all":
        return list(REGISTRY.values())
    return [get_check(slug.strip()) for slug in prop.split(",") if slug.strip()]


# =============================================================================
# HELPERS
# =============================================================================

def classify_replay(expr: str, ideal: Ideal, multset: MultSet, n: int) -> str:
    return (f'sabsorb classify --ring "{expr}" --ideal "{render(ideal)}" '
            f'--mult "{render(multset)}" --n {n}')


def verify_replay(slug: str, expr: str) -> str:
    return f'sabsorb verify --prop {slug} --ring "{expr}"'


def _key(entry: CorpusEntry, *parts: object) -> str:
    shown = [render(p) if isinstance(p, (Ideal, MultSet)) else str(p) for p in parts]
    return " | ".join([entry.expr, *shown])


def _assume(condition: bool, reason: str) -> None:
    if not condition:
        raise Skip(reason)


def _upto(values: range, top: int) -> range:
    return range(values.start, min(values.stop, top + 1))


def _value(corpus: Corpus, ideal: Ideal, multset: MultSet) -> int:
    return int(corpus.omega(ideal, multset).value)


def _quads(corpus: Corpus, *, max_order: int | None = None
           ) -> Iterator[tuple[CorpusEntry, MultSet, Ideal, int]]:
    for entry in corpus.entries:
        if max_order is not None and entry.ring.order > max_order:
            continue
        for S in corpus.family(entry.ring):
            for I in corpus.disjoint(entry.ring, S):
                for n in corpus.n_range(entry.ring):
                    yield entry, S, I, n


def _per_quad(corpus: Corpus, run: Callable[..., Result], *,
              max_order: int | None = None) -> Iterator[Instance]:
    for entry, S, I, n in _quads(corpus, max_order=max_order):
        yield Instance(_key(entry, I, S, f"n={n}"), partial(run, corpus, entry, S, I, n),
                       classify_replay(entry.expr, I, S, n))


def _per_multset(corpus: Corpus, slug: str, run: Callable[..., Result], *,
                 entries: list[CorpusEntry] | None = None,
                 max_order: int | None = None) -> Iterator[Instance]:
    for entry in entries if entries is not None else corpus.entries:
        if max_order is not None and entry.ring.order > max_order:
            continue
        for S in corpus.family(entry.ring):
            yield Instance(_key(entry, S), partial(run, corpus, entry, S),
                           verify_replay(slug, entry.expr))


def _amalgams(corpus: Corpus) -> list[CorpusEntry]:
    return [e for e in corpus.entries if e.amalgamation is not None]


def _kernels(ring: FiniteRing) -> list[Ideal]:
    return [k for k in all_ideals(ring) if k.is_proper and not k.is_zero]


def _absorbing_hypothesis(corpus: Corpus, I: Ideal, S: MultSet, n: int):
    verdict = corpus.absorbing(I, S, n)
    _assume(verdict.holds, f"not S-{n}-absorbing")
    return verdict


# =============================================================================
# PRODUCTS, INTERSECTIONS, RADICALS
# =============================================================================

@register("product-absorbing", "IJ is S-n-absorbing when I is and J meets S")
def _product_absorbing(corpus: Corpus) -> Iterator[Instance]:
    yield from _per_quad(corpus, _run_product_absorbing)


def _run_product_absorbing(corpus, entry, S, I, n) -> Result:
    _absorbing_hypothesis(corpus, I, S, n)
    for J in corpus.ideals(entry.ring):
        if J.meets(S.members) is None:
            continue
        IJ = ideal_product(I, J)
        if not corpus.absorbing(IJ, S, n).holds:
            return f"I·{render(J)} = {render(IJ)} is not S-{n}-absorbing"
    return None


def _subring_embeddings(entry: CorpusEntry) -> list[tuple[str, RingHom]]:
    found = []
    if entry.amalgamation is not None:
        found.append(("amalgam in product", entry.amalgamation.inclusion))
    if isinstance(entry.ring.construction, PolyInfo):
        found.append(("constants", constant_embedding(entry.ring)))
    return found


@register("subring-contraction", "J S-n-absorbing in T gives J ∩ R S-n-absorbing in R")
def _subring_contraction(corpus: Corpus) -> Iterator[Instance]:
    for entry in corpus.entries:
        for name, incl in _subring_embeddings(entry):
            for S in corpus.family(incl.source):
                yield Instance(_key(entry, name, S), partial(_run_subring, corpus, incl, S),
                               verify_replay("subring-contraction", entry.expr))


def _run_subring(corpus: Corpus, incl: RingHom, S: MultSet) -> Result:
    S_T = image_mult_set(S, incl)
    for J in corpus.disjoint(incl.target, S_T):
        for n in corpus.n_range(incl.source):
            if not corpus.absorbing(J, S_T, n).holds:
                continue
            below = preimage_ideal(incl, J)
            if not corpus.absorbing(below, S, n).holds:
                return f"{render(J)} ∩ R = {render(below)} is not S-{n}-absorbing"
    return None


@register("intersection-mixed", "I₁ ∩ I₂ is S₁S₂-(n₁+n₂)-absorbing")
def _intersection_mixed(corpus: Corpus) -> Iterator[Instance]:
    for entry in corpus.entries:
        if entry.ring.order > corpus.spec.small_order:
            continue
        family = corpus.family(entry.ring)
        for a, S1 in enumerate(family):
            for S2 in family[a:]:
                yield Instance(_key(entry, S1, S2),
                               partial(_run_intersection_mixed, corpus, entry, S1, S2),
                               verify_replay("intersection-mixed", entry.expr))


def _run_intersection_mixed(corpus, entry, S1, S2) -> Result:
    S = mult_product(S1, S2)
    ran = False
    for I1 in corpus.disjoint(entry.ring, S1):
        for I2 in corpus.disjoint(entry.ring, S2):
            inter = ideal_intersection(I1, I2)
            if inter.meets(S.members) is not None:
                continue
            ran = True
            n = _value(corpus, I1, S1) + _value(corpus, I2, S2)
            if not corpus.absorbing(inter, S, n).holds:
                return (f"{render(I1)} ∩ {render(I2)} is not S₁S₂-{n}-absorbing "
                        f"with S₁S₂ = {render(S)}")
    _assume(ran, "every intersection meets S₁S₂")
    return None


@register("intersection-same", "an intersection of S-nᵢ-absorbing ideals is S-Σnᵢ-absorbing")
def _intersection_same(corpus: Corpus) -> Iterator[Instance]:
    yield from _per_multset(corpus, "intersection-same", _run_intersection_same)


def _run_intersection_same(corpus, entry, S) -> Result:
    ideals = corpus.disjoint(entry.ring, S)
    sizes = (2, 3) if entry.ring.order <= corpus.spec.small_order else (2,)
    ran = False
    for size in sizes:
        for group in combinations(ideals, size):
            ran = True
            inter = reduce(ideal_intersection, group)
            n = sum(_value(corpus, I, S) for I in group)
            if not corpus.absorbing(inter, S, n).holds:
                names = " ∩ ".join(render(I) for I in group)
                return f"{names} is not S-{n}-absorbing"
    _assume(ran, "fewer than two ideals miss S")
    return None


@register("radical-law", "√I is S-n-absorbing and s·aⁿ ∈ I for a ∈ √I")
def _radical_law(corpus: Corpus) -> Iterator[Instance]:
    yield from _per_quad(corpus, _run_radical_law)


def _run_radical_law(corpus, entry, S, I, n) -> Result:
    verdict = _absorbing_hypothesis(corpus, I, S, n)
    ring = entry.ring
    root = radical(I)
    if not corpus.absorbing(root, S, n).holds:
        return f"√I = {render(root)} is not S-{n}-absorbing"
    for s in verdict.witnesses:
        for a in root:
            if ring.mul(s, ring.power(a, n)) not in I:
                return f"{ring.labels[s]}·{ring.labels[a]}^{n} is outside I"
    return None


@register("comaximal-product", "a product of pairwise comaximal S-primes is S-m-absorbing")
def _comaximal_product(corpus: Corpus) -> Iterator[Instance]:
    yield from _per_multset(corpus, "comaximal-product", _run_comaximal_product)


def _run_comaximal_product(corpus, entry, S) -> Result:
    primes = [P for P in corpus.disjoint(entry.ring, S) if corpus.absorbing(P, S, 1).holds]
    sizes = (2, 3) if entry.ring.order <= corpus.spec.small_order else (2,)
    ran = False
    for size in sizes:
        for group in combinations(primes, size):
            if not all(comaximal(p, q) for p, q in combinations(group, 2)):
                continue
            ran = True
            product = product_of_ideals(group)
            if not corpus.absorbing(product, S, size).holds:
                names = "·".join(render(P) for P in group)
                return f"{names} is not S-{size}-absorbing"
    _assume(ran, "no pairwise comaximal S-prime ideals")
    return None


# =============================================================================
# HOMOMORPHISMS AND QUOTIENTS
# =============================================================================

# quotient-based checks stay on rings up to this order
QUOTIENT_ORDER = 64


def _quotient_instances(corpus: Corpus, slug: str, run: Callable[..., Result],
                        kernels: Callable[[FiniteRing], list[Ideal]]) -> Iterator[Instance]:
    for entry in corpus.entries:
        if entry.ring.order > QUOTIENT_ORDER:
            continue
        for K in kernels(entry.ring):
            for S in corpus.family(entry.ring):
                yield Instance(_key(entry, K, S), partial(run, corpus, entry, K, S),
                               verify_replay(slug, entry.expr))


def _quotient_by(K: Ideal, S: MultSet) -> tuple[RingHom, MultSet]:
    _assume(K.meets(S.members) is None, "kernel meets S")
    _, phi = make_quotient(K.ring, K)
    return phi, image_mult_set(S, phi)


@register("hom-transport", "S-n-absorbing transfers along a surjection both ways")
def _hom_transport(corpus: Corpus) -> Iterator[Instance]:
    yield from _quotient_instances(corpus, "hom-transport", _run_hom_transport, _kernels)


def _run_hom_transport(corpus, entry, K, S) -> Result:
    phi, phi_S = _quotient_by(K, S)
    n_range = corpus.n_range(entry.ring)
    for I in corpus.disjoint(entry.ring, S):
        if not K <= I:
            continue
        image = image_ideal(phi, I)
        for n in n_range:
            if corpus.absorbing(I, S, n).holds != corpus.absorbing(image, phi_S, n).holds:
                return f"{render(I)} and its image disagree at n={n}"
    for J in corpus.disjoint(phi.target, phi_S):
        pulled = preimage_ideal(phi, J)
        for n in n_range:
            if corpus.absorbing(J, phi_S, n).holds != corpus.absorbing(pulled, S, n).holds:
                return f"{render(J)} and its preimage {render(pulled)} disagree at n={n}"
    return None


@register("hom-correspondence", "S-n-absorbing ideals over ker φ match those of φ(R)")
def _hom_correspondence(corpus: Corpus) -> Iterator[Instance]:
    yield from _quotient_instances(corpus, "hom-correspondence", _run_hom_correspondence,
                                   _kernels)


def _run_hom_correspondence(corpus, entry, K, S) -> Result:
    phi, phi_S = _quotient_by(K, S)
    for n in corpus.n_range(entry.ring):
        above = [I for I in corpus.disjoint(entry.ring, S)
                 if K <= I and corpus.absorbing(I, S, n).holds]
        images = [image_ideal(phi, I) for I in above]
        below = {J for J in corpus.disjoint(phi.target, phi_S)
                 if corpus.absorbing(J, phi_S, n).holds}
        if set(images) != below:
            return f"correspondence breaks at n={n}"
        for (I1, J1), (I2, J2) in combinations(zip(above, images), 2):
            if (I1 <= I2) != (J1 <= J2) or (I2 <= I1) != (J2 <= J1):
                return f"order not preserved for {render(I1)}, {render(I2)} at n={n}"
    return None


@register("factor-ring", "J is S-n-absorbing iff J/I is S/I-n-absorbing in R/I")
def _factor_ring(corpus: Corpus) -> Iterator[Instance]:
    yield from _quotient_instances(corpus, "factor-ring", _run_factor_ring,
                                   lambda ring: [k for k in all_ideals(ring) if k.is_proper])


def _run_factor_ring(corpus, entry, I, S) -> Result:
    phi, phi_S = _quotient_by(I, S)
    for J in corpus.disjoint(entry.ring, S):
        if not I <= J:
            continue
        factor = image_ideal(phi, J)
        for n in corpus.n_range(entry.ring):
            if corpus.absorbing(J, S, n).holds != corpus.absorbing(factor, phi_S, n).holds:
                return f"{render(J)} and {render(J)}/I disagree at n={n}"
    return None


# =============================================================================
# COLONS, PRIMES, MINIMAL IDEALS
# =============================================================================

def _stabilization_note(summary: CheckSummary, findings: list[str]) -> str | None:
    late = sum(1 for f in findings if f.startswith("colon stabilization past ω"))
    if not late:
        return None
    return f"colon stabilization is checked at n = ω; it fails past ω on {late} instances"


@register("colon-stabilization", "I:sⁿ = I:sᵏ for k ≥ n at n = ω with its witness s",
          summarize=_stabilization_note)
def _colon_stabilization(corpus: Corpus) -> Iterator[Instance]:
    for entry in corpus.entries:
        for S in corpus.family(entry.ring):
            for I in corpus.disjoint(entry.ring, S):
                yield Instance(_key(entry, I, S),
                               partial(_run_colon_stabilization, corpus, entry, S, I),
                               verify_replay("colon-stabilization", entry.expr))


def _run_colon_stabilization(corpus, entry, S, I) -> Result:
    labels = entry.ring.labels
    value = corpus.omega(I, S)
    n, s = int(value.value), value.witness_s
    stable = colon_stabilization_check(I, S, s, n)
    if not stable.holds:
        _, k = stable.counterexample
        return f"I:{labels[s]}^{n} differs from I:{labels[s]}^{k} at n = ω"
    # past ω the colons may keep growing
    for m in corpus.n_range(entry.ring):
        if m <= n:
            continue
        for w in corpus.absorbing(I, S, m).witnesses:
            try:
                late = colon_stabilization_check(I, S, w, m)
            except PreconditionError:
                continue
            if not late.holds:
                _, k = late.counterexample
                return Finding(f"colon stabilization past ω: {render(I)} over {render(S)} in "
                               f"{entry.expr} (ω = {n}), s={labels[w]}, n={m}: "
                               f"I:s^{m} differs from I:s^{k}")
    return None


@register("colon-characterization", "S-n-absorbing iff some I:s is n-absorbing")
def _colon_characterization(corpus: Corpus) -> Iterator[Instance]:
    yield from _per_quad(corpus, _run_colon_characterization)


def _run_colon_characterization(corpus, entry, S, I, n) -> Result:
    direct = corpus.absorbing(I, S, n)
    via = is_S_n_absorbing_via_colon(I, S, n)
    if direct.holds != via.holds:
        return (f"definition says {direct.holds}, colon search says {via.holds} "
                f"(counterexample {direct.counterexample or via.counterexample})")
    return None


@register("minimal-prime-bound", "at most n minimal primes of I miss S")
def _minimal_prime_bound(corpus: Corpus) -> Iterator[Instance]:
    yield from _per_quad(corpus, _run_minimal_prime_bound)


def _run_minimal_prime_bound(corpus, entry, S, I, n) -> Result:
    _absorbing_hypothesis(corpus, I, S, n)
    free = [P for P in minimal_primes(I) if P.meets(S.members) is None]
    if len(free) > n:
        return f"{len(free)} minimal primes miss S: {', '.join(render(P) for P in free)}"
    return None


@register("chain-intersection", "a chain of S-n-absorbing ideals intersects to one")
def _chain_intersection(corpus: Corpus) -> Iterator[Instance]:
    for entry in corpus.entries:
        for S in corpus.family(entry.ring):
            for n in corpus.n_range(entry.ring):
                yield Instance(_key(entry, S, f"n={n}"),
                               partial(_run_chain_intersection, corpus, entry, S, n),
                               verify_replay("chain-intersection", entry.expr))


def _run_chain_intersection(corpus, entry, S, n) -> Result:
    _assume(is_strongly_multiplicative(S).holds, "S is not strongly multiplicative")
    members = [I for I in corpus.disjoint(entry.ring, S) if corpus.absorbing(I, S, n).holds]
    ran = False
    for size in (2, 3):
        for chain in combinations(members, size):
            if not all(a < b or b < a for a, b in combinations(chain, 2)):
                continue
            ran = True
            inter = reduce(ideal_intersection, chain)
            if not corpus.absorbing(inter, S, n).holds:
                return f"intersection {render(inter)} of a chain is not S-{n}-absorbing"
    _assume(ran, "no chain of S-n-absorbing ideals")
    return None


@register("minimal-existence", "every ideal missing S lies over a minimal S-n-absorbing ideal")
def _minimal_existence(corpus: Corpus) -> Iterator[Instance]:
    for entry in corpus.entries:
        for S in corpus.family(entry.ring):
            for I in corpus.disjoint(entry.ring, S):
                yield Instance(_key(entry, I, S), partial(_run_minimal_existence, corpus, S, I),
                               verify_replay("minimal-existence", entry.expr))


def _run_minimal_existence(corpus, S, I) -> Result:
    _assume(is_strongly_multiplicative(S).holds, "S is not strongly multiplicative")
    for n in corpus.n_range(I.ring):
        found = minimal_s_n_absorbing_over(I, S, n)
        if not found:
            return f"no minimal S-{n}-absorbing ideal over {render(I)}"
        for M in found:
            if not (I <= M and M.meets(S.members) is None and corpus.absorbing(M, S, n).holds):
                return f"{render(M)} is not an S-{n}-absorbing ideal over {render(I)}"
    return None


# =============================================================================
# LOCALIZATION AND SATURATION
# =============================================================================

@register("localization-extension", "IR_S is n-absorbing when I is S-n-absorbing")
def _localization_extension(corpus: Corpus) -> Iterator[Instance]:
    yield from _per_quad(corpus, _run_localization_extension)


def _run_localization_extension(corpus, entry, S, I, n) -> Result:
    _absorbing_hypothesis(corpus, I, S, n)
    extended = extend_ideal(I, corpus.localization(S))
    if not is_n_absorbing(extended, n).holds:
        return f"IR_S = {render(extended)} is not {n}-absorbing"
    return None


@register("saturation-colon", "Sat_S(I) = I:t and both sides decompose into primaries")
def _saturation_colon(corpus: Corpus) -> Iterator[Instance]:
    for entry in corpus.entries:
        for S in corpus.family(entry.ring):
            for I in corpus.disjoint(entry.ring, S):
                yield Instance(_key(entry, I, S), partial(_run_saturation_colon, corpus, S, I),
                               verify_replay("saturation-colon", entry.expr))


def _decomposes(ideal: Ideal) -> bool:
    parts = primary_decomposition(ideal)
    return all(is_primary(q) for q in parts) and reduce(ideal_intersection, parts) == ideal


def _run_saturation_colon(corpus, S, I) -> Result:
    sat, t = sat_ideal(I, S)
    if sat != colon(I, t):
        return f"Sat_S(I) = {render(sat)} differs from I:{I.ring.labels[t]}"
    if not _decomposes(sat):
        return f"no primary decomposition of {render(sat)}"
    extended = extend_ideal(I, corpus.localization(S))
    if not _decomposes(extended):
        return f"no primary decomposition of IR_S = {render(extended)}"
    return None


@register("localization-equivalence", "S-n-absorbing iff IR_S is n-absorbing")
def _localization_equivalence(corpus: Corpus) -> Iterator[Instance]:
    yield from _per_quad(corpus, _run_localization_equivalence)


def _run_localization_equivalence(corpus, entry, S, I, n) -> Result:
    extended = extend_ideal(I, corpus.localization(S))
    down = corpus.absorbing(I, S, n).holds
    up = is_n_absorbing(extended, n).holds
    if down != up:
        return f"I is{'' if down else ' not'} S-{n}-absorbing but IR_S is{'' if up else ' not'}"
    return None


@register("saturation-criterion", "IR_S n-absorbing plus Sat_S(I) = I:s gives S-n-absorbing")
def _saturation_criterion(corpus: Corpus) -> Iterator[Instance]:
    yield from _per_quad(corpus, _run_saturation_criterion)


def _run_saturation_criterion(corpus, entry, S, I, n) -> Result:
    absorbing = corpus.absorbing(I, S, n).holds
    local = is_n_absorbing(extend_ideal(I, corpus.localization(S)), n).holds
    sat, _ = sat_ideal(I, S)
    sat_is_colon = any(colon(I, s) == sat for s in S)
    some_colon = is_S_n_absorbing_via_colon(I, S, n).holds
    if local and sat_is_colon and not absorbing:
        return "IR_S is n-absorbing and Sat_S(I) is a colon, yet I is not S-n-absorbing"
    if corpus.locally_divided(entry.ring) and absorbing and not (local and sat_is_colon):
        return "locally divided ring: S-n-absorbing I without the localization criterion"
    if not absorbing == local == some_colon:
        return (f"S-n-absorbing={absorbing}, IR_S n-absorbing={local}, "
                f"some I:s n-absorbing={some_colon}")
    return None


# =============================================================================
# OMEGA
# =============================================================================

@register("omega-transport", "ω agrees across quotients, colons and localization")
def _omega_transport(corpus: Corpus) -> Iterator[Instance]:
    for entry in corpus.entries:
        for S in corpus.family(entry.ring):
            for I in corpus.disjoint(entry.ring, S):
                yield Instance(_key(entry, I, S), partial(_run_omega_transport, corpus, entry, S, I),
                               verify_replay("omega-transport", entry.expr))


def _run_omega_transport(corpus, entry, S, I) -> Result:
    ring = entry.ring
    value = _value(corpus, I, S)
    if not any(_value(corpus, colon(I, s), trivial_mult_set(ring)) == value for s in S):
        return f"no s with ω(I:s) = {value}"
    loc = corpus.localization(S)
    extended = extend_ideal(I, loc)
    local_value = _value(corpus, extended, trivial_mult_set(loc.ring))
    if local_value != value:
        return f"ω(IR_S) = {local_value} but ω_S(I) = {value}"
    if corpus.locally_divided(ring):
        sat, _ = sat_ideal(I, S)
        sat_value = _value(corpus, sat, trivial_mult_set(ring))
        if sat_value != value:
            return f"locally divided ring: ω(Sat_S(I)) = {sat_value} but ω_S(I) = {value}"
    if ring.order > corpus.spec.small_order:
        return None
    for K in _kernels(ring):
        if not K <= I:
            continue
        phi, phi_S = _quotient_by(K, S)
        if _value(corpus, image_ideal(phi, I), phi_S) != value:
            return f"ω changes modulo {render(K)}"
        for J in corpus.disjoint(phi.target, phi_S):
            if _value(corpus, preimage_ideal(phi, J), S) != _value(corpus, J, phi_S):
                return f"ω of {render(J)} modulo {render(K)} differs from its preimage"
    return None


def _product_entries(corpus: Corpus) -> list[CorpusEntry]:
    return [e for e in corpus.entries if isinstance(e.ring.construction, ProductInfo)]


def _factor_instances(corpus: Corpus, slug: str, run: Callable[..., Result]
                      ) -> Iterator[Instance]:
    for entry in _product_entries(corpus):
        info = entry.ring.construction
        for S1 in corpus.family(info.left):
            for S2 in corpus.family(info.right):
                yield Instance(_key(entry, S1, S2), partial(run, corpus, entry, S1, S2),
                               verify_replay(slug, entry.expr))


def _factor_pairs(corpus: Corpus, entry: CorpusEntry, S1: MultSet, S2: MultSet):
    info = entry.ring.construction
    S = product_mult_set(entry.ring, S1, S2)
    for I1 in corpus.disjoint(info.left, S1):
        for I2 in corpus.disjoint(info.right, S2):
            yield I1, I2, product_ideal(entry.ring, I1, I2), S


@register("omega-product", "ω of I₁×I₂ over S₁×S₂ is ω(I₁) + ω(I₂)")
def _omega_product(corpus: Corpus) -> Iterator[Instance]:
    yield from _factor_instances(corpus, "omega-product", _run_omega_product)


def _run_omega_product(corpus, entry, S1, S2) -> Result:
    for I1, I2, I, S in _factor_pairs(corpus, entry, S1, S2):
        total = _value(corpus, I, S)
        parts = _value(corpus, I1, S1) + _value(corpus, I2, S2)
        if total != parts:
            return f"ω({render(I)}) = {total}, components sum to {parts}"
    return None


@register("product-absorbing-sum", "I₁ S₁-m and I₂ S₂-n absorbing give (m+n) for I₁×I₂")
def _product_absorbing_sum(corpus: Corpus) -> Iterator[Instance]:
    yield from _factor_instances(corpus, "product-absorbing-sum", _run_product_absorbing_sum)


def _run_product_absorbing_sum(corpus, entry, S1, S2) -> Result:
    info = entry.ring.construction
    for I1, I2, I, S in _factor_pairs(corpus, entry, S1, S2):
        for m in corpus.n_range(info.left):
            if not corpus.absorbing(I1, S1, m).holds:
                continue
            for n in corpus.n_range(info.right):
                if corpus.absorbing(I2, S2, n).holds and not corpus.absorbing(I, S, m + n).holds:
                    return f"{render(I)} is not S-{m + n}-absorbing"
    return None


@register("exactly-n-primes", "n minimal primes missing S give s·P₁⋯Pₙ ⊆ I and ω = n")
def _exactly_n_primes(corpus: Corpus) -> Iterator[Instance]:
    yield from _per_quad(corpus, _run_exactly_n_primes)


def _run_exactly_n_primes(corpus, entry, S, I, n) -> Result:
    primes = minimal_primes(I)
    _assume(all(P.meets(S.members) is None for P in primes), "a minimal prime meets S")
    _assume(len(primes) == n, "number of minimal primes differs from n")
    _absorbing_hypothesis(corpus, I, S, n)
    product = product_of_ideals(primes)
    ring = entry.ring
    if not any(all(ring.mul(s, x) in I for x in product) for s in S):
        return f"no s in S with s·{render(product)} ⊆ I"
    value = _value(corpus, I, S)
    if value != n:
        return f"ω = {value}, expected {n}"
    return None


@register("saturation-invariance", "S and its saturation give the same verdicts")
def _saturation_invariance(corpus: Corpus) -> Iterator[Instance]:
    yield from _per_quad(corpus, _run_saturation_invariance)


def _run_saturation_invariance(corpus, entry, S, I, n) -> Result:
    saturated = saturate_multset(S)
    if I.meets(saturated.members) is not None:
        return f"I meets the saturation {render(saturated)} but not S"
    if corpus.absorbing(I, S, n).holds != corpus.absorbing(I, saturated, n).holds:
        return f"verdict changes under saturation {render(saturated)}"
    return None


@register("omega-finite", "ω is finite everywhere and every ideal is strongly S-Laskerian")
def _omega_finite(corpus: Corpus) -> Iterator[Instance]:
    yield from _per_multset(corpus, "omega-finite", _run_omega_finite)


def _run_omega_finite(corpus, entry, S) -> Result:
    ring = entry.ring
    table = omega_table(ring, S)
    if not all(v.is_finite for v in table.values.values()):
        return "an ω value is infinite"
    ideals = corpus.disjoint(ring, S)
    strong = [Q for Q in ideals if s_variant_predicates(Q, S).strongly_S_primary.holds]
    for I in ideals:
        over = [Q for Q in strong if I <= Q]
        if not over or reduce(ideal_intersection, over) != I:
            return f"{render(I)} is not an intersection of strongly S-primary ideals"
    if S == corpus.family(ring)[0]:
        arithmetical = arithmetical_verdict(ring).holds
        if arithmetical != distributivity_verdict(ring).holds:
            return f"arithmetical={arithmetical} disagrees with ideal-lattice distributivity"
    return None


@register("chained-dichotomy", "chained rings have finite ω and no regular nonunits")
def _chained_dichotomy(corpus: Corpus) -> Iterator[Instance]:
    yield from _per_multset(corpus, "chained-dichotomy", _run_chained_dichotomy)


def _run_chained_dichotomy(corpus, entry, S) -> Result:
    ring = entry.ring
    _assume(chained_verdict(ring).holds, "ring is not chained")
    table = omega_table(ring, S)
    if not all(v.is_finite for v in table.values.values()):
        return "an ω value is infinite"
    zero_divisor = (ring.mul_table == ring.zero).sum(axis=1) > 1
    regular = np.flatnonzero(~zero_divisor).tolist()
    saturated = saturate_multset(S)
    stray = [x for x in regular if x not in ring.units and x not in saturated]
    if stray:
        return f"regular nonunit {ring.labels[stray[0]]} outside the saturation of S"
    return None


# =============================================================================
# AMALGAMATION
# =============================================================================

def _per_base_multset(corpus: Corpus, slug: str, run: Callable[..., Result]
                      ) -> Iterator[Instance]:
    for entry in _amalgams(corpus):
        for S in corpus.family(entry.amalgamation.A):
            yield Instance(_key(entry, S), partial(run, corpus, entry.amalgamation, S),
                           verify_replay(slug, entry.expr))


def _sub_ideals(amal: Amalgamation) -> tuple[Ideal, ...]:
    return all_ideals(amal.subring[0])


@register("amalgam-disjointness", "I, K miss S, f(S) iff I⋈J, K̄, I×K miss the lifted S")
def _amalgam_disjointness(corpus: Corpus) -> Iterator[Instance]:
    yield from _per_base_multset(corpus, "amalgam-disjointness", _run_amalgam_disjointness)


def _run_amalgam_disjointness(corpus, amal, S) -> Result:
    for I in all_ideals(amal.A):
        for K in _sub_ideals(amal):
            verdict = check_amalgam_disjointness(amal, I, K, S)
            if not verdict.holds:
                return f"{verdict.note} (I = {render(I)}, K = {render(K)})"
    return None


@register("amalgam-transport", "absorbing verdicts transfer between A, f(A)+J and A⋈J")
def _amalgam_transport(corpus: Corpus) -> Iterator[Instance]:
    yield from _per_base_multset(corpus, "amalgam-transport", _run_amalgam_transport)


def _run_amalgam_transport(corpus, amal, S) -> Result:
    f_S = amal.image_mult_set(S)
    degrees = _upto(corpus.n_range(amal.A), 3)
    for I in corpus.disjoint(amal.A, S):
        for K in corpus.disjoint(amal.subring[0], f_S):
            for m in degrees:
                for n in degrees:
                    verdict = check_amalgam_transport(amal, I, K, S, m, n)
                    if not verdict.holds:
                        return f"{verdict.note} (I = {render(I)}, K = {render(K)}, m={m}, n={n})"
    return None


@register("amalgam-classification", "lifted-S-n-absorbing ideals over a kernel are I⋈J or K̄")
def _amalgam_classification(corpus: Corpus) -> Iterator[Instance]:
    yield from _per_base_multset(corpus, "amalgam-classification", _run_amalgam_classification)


def _run_amalgam_classification(corpus, amal, S) -> Result:
    if amal.pi1.kernel != amal.kernel_pi1 or amal.pi2.kernel != amal.kernel_pi2:
        return "projection kernels are not {0}×J and f⁻¹(J)×{0}"
    sub, _ = amal.subring
    product = amal.inclusion.target
    for I in all_ideals(amal.A):
        for K in all_ideals(sub):
            box = {a * amal.B.order + b for a in I for b in amal.in_B(K)}
            contracted = preimage_ideal(amal.inclusion, as_ideal(product, box))
            if contracted != special_ideals(amal, I, K).IxK_bar:
                return f"(I×K) ∩ A⋈J differs from the contraction for {render(I)}, {render(K)}"

    lifted = lift_mult_set(S, amal)
    f_S = amal.image_mult_set(S)
    for n in _upto(corpus.n_range(amal.A), 3):
        for L in corpus.disjoint(amal.ring, lifted):
            if not corpus.absorbing(L, lifted, n).holds:
                continue
            if amal.kernel_pi1 <= L.members:
                I = as_ideal(amal.A, amal.pi1.image(L.members))
                if special_ideals(amal, I).I_bowtie_J != L:
                    return f"{render(L)} contains {{0}}×J but is not I⋈J"
                if not corpus.absorbing(I, S, n).holds:
                    return f"{render(L)} = I⋈J with I = {render(I)} not S-{n}-absorbing"
            if amal.kernel_pi2 <= L.members:
                K = as_ideal(sub, {amal.to_subring(b) for b in amal.pi2.image(L.members)})
                if special_ideals(amal, zero_ideal(amal.A), K).K_bar != L:
                    return f"{render(L)} contains f⁻¹(J)×{{0}} but is not K̄"
                if not corpus.absorbing(K, f_S, n).holds:
                    return f"{render(L)} = K̄ with K = {render(K)} not f(S)-{n}-absorbing"
    return None


@register("primary-sufficiency", "P-primary I with s·Pⁿ ⊆ I is associated to s")
def _primary_sufficiency(corpus: Corpus) -> Iterator[Instance]:
    yield from _per_multset(corpus, "primary-sufficiency", _run_primary_sufficiency)


def _run_primary_sufficiency(corpus, entry, S) -> Result:
    ring = entry.ring
    ran = False
    for I in corpus.disjoint(ring, S):
        if not is_primary(I):
            continue
        P = radical(I)
        for n in corpus.n_range(ring):
            power = ideal_power(P, n)
            for s in S:
                if not all(ring.mul(s, x) in I for x in power):
                    continue
                ran = True
                if not is_associated(I, s, n).holds or not corpus.absorbing(I, S, n).holds:
                    return f"{render(I)} with s = {ring.labels[s]} is not S-{n}-absorbing"
    _assume(ran, "no primary ideal with s·Pⁿ ⊆ I")
    return None


@register("radical-power", "s·(√I)ⁿ ⊆ I for I associated to s")
def _radical_power(corpus: Corpus) -> Iterator[Instance]:
    yield from _per_quad(corpus, _run_radical_power)


def _run_radical_power(corpus, entry, S, I, n) -> Result:
    verdict = _absorbing_hypothesis(corpus, I, S, n)
    ring = entry.ring
    power = ideal_power(radical(I), n)
    for s in verdict.witnesses:
        outside = [x for x in power if ring.mul(s, x) not in I]
        if outside:
            return f"{ring.labels[s]}·{ring.labels[outside[0]]} is outside I"
    return None


def _admissible_h(amal: Amalgamation, I: Ideal) -> Iterator[tuple[Ideal, Ideal]]:
    """(H, I⋈H) for every H of f(A)+J with f(I)J ⊆ H ⊆ J."""
    for H in _sub_ideals(amal):
        try:
            yield H, special_ideals(amal, I, H=H).I_bowtie_H
        except PreconditionError:
            continue


@register("local-amalgam-radical", "√(I⋈H) = m⋈J and primary transport over a local base")
def _local_amalgam_radical(corpus: Corpus) -> Iterator[Instance]:
    for entry in _amalgams(corpus):
        yield Instance(_key(entry), partial(_run_local_radical, entry.amalgamation),
                       verify_replay("local-amalgam-radical", entry.expr))


def _run_local_radical(amal: Amalgamation) -> Result:
    try:
        m = local_maximal_ideal(amal)
    except PreconditionError as exc:
        raise Skip(str(exc)) from None
    m_bowtie_j = special_ideals(amal, m).I_bowtie_J
    for I in all_ideals(amal.A):
        if not I.is_proper:
            continue
        m_primary = is_primary(I) and radical(I) == m
        for H, bowtie in _admissible_h(amal, I):
            root = radical(bowtie)
            if radical(I) == m and root != m_bowtie_j:
                return f"√({render(I)}⋈{render(H)}) = {render(root)}, expected m⋈J"
            if m_primary != (is_primary(bowtie) and root == m_bowtie_j):
                return f"primary transport fails for {render(I)}⋈{render(H)}"
    return None


@register("local-amalgam", "I is associated to s iff I⋈H is associated to (s, f(s))")
def _local_amalgam(corpus: Corpus) -> Iterator[Instance]:
    yield from _per_base_multset(corpus, "local-amalgam", _run_local_amalgam)


def _run_local_amalgam(corpus, amal, S) -> Result:
    ran = False
    for n in _upto(corpus.n_range(amal.A), 3):
        for I in corpus.disjoint(amal.A, S):
            for H, _ in _admissible_h(amal, I):
                for s in S:
                    try:
                        verdict = verify_local_amalgam(amal, I, H, S, s, n)
                    except PreconditionError:
                        continue
                    ran = True
                    if not verdict.holds:
                        return (f"{verdict.note} (I = {render(I)}, H = {render(H)}, "
                                f"s = {amal.A.labels[s]}, n={n})")
    _assume(ran, "local amalgam hypotheses never met")
    return None


# =============================================================================
# SEARCHES
# =============================================================================

def _quantifier_note(summary: CheckSummary, findings: list[str]) -> str:
    if summary.failed:
        return (f"quantifier order: uniform and per-tuple predicates differ on "
                f"{summary.failed} instances")
    return (f"quantifier order: uniform and per-tuple predicates agree on all "
            f"{summary.passed} instances")


@register("quantifier-order", "uniform s versus a per-tuple s", summarize=_quantifier_note)
def _quantifier_order(corpus: Corpus) -> Iterator[Instance]:
    yield from _per_quad(corpus, _run_quantifier_order)


def _run_quantifier_order(corpus, entry, S, I, n) -> Result:
    uniform = corpus.absorbing(I, S, n)
    relaxed = is_S_n_absorbing_relaxed(I, S, n)
    if uniform.holds != relaxed.holds:
        return f"uniform={uniform.holds}, per-tuple={relaxed.holds}"
    return None


def _search_note(summary: CheckSummary, findings: list[str]) -> str | None:
    if findings:
        return None
    return "I⋈H search: every S-n-absorbing I gave an S-n-absorbing I⋈H on this corpus"


@register("amalgam-counterexample-search", "an S-n-absorbing I whose I⋈H is not",
          summarize=_search_note)
def _amalgam_counterexample_search(corpus: Corpus) -> Iterator[Instance]:
    for entry in _amalgams(corpus):
        yield Instance(_key(entry), partial(_run_search, corpus, entry),
                       verify_replay("amalgam-counterexample-search", entry.expr))


def _run_search(corpus: Corpus, entry: CorpusEntry) -> Result:
    amal = entry.amalgamation
    for S in corpus.family(amal.A):
        lifted = lift_mult_set(S, amal)
        for n in _upto(corpus.n_range(amal.A), 3):
            for I in corpus.disjoint(amal.A, S):
                if not corpus.absorbing(I, S, n).holds:
                    continue
                for H, bowtie in _admissible_h(amal, I):
                    if bowtie.meets(lifted.members) is not None:
                        continue
                    if not corpus.absorbing(bowtie, lifted, n).holds:
                        return Finding(f"I⋈H counterexample: {render(I)}⋈{render(H)} in "
                                       f"{entry.expr} is not S-{n}-absorbing for "
                                       f"S = {render(S)}")
    return None
