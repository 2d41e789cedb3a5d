"""
Verification corpora: which rings, multiplicative sets and n values a run covers.

Ring lists are plain description-language strings, resolved lazily into a
Corpus that caches ideal lattices, multiplicative-set families, localizations
and absorbing verdicts shared by every check.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from ..classify.absorbing import is_S_n_absorbing, omega, omega_bound
from ..classify.ring_classes import locally_divided_verdict
from ..config import get_settings
from ..errors import CapacityError, PreconditionError
from ..models import CorpusSpec, OmegaValue, Verdict
from ..dsl import parse, render
from ..dsl.ast import Amalg
from ..dsl.elaborate import build_amalgamation, build_ring
from ..rings.amalgam import Amalgamation
from ..rings.core import FiniteRing
from ..rings.ideals import Ideal, all_ideals, radical, zero_ideal
from ..rings.multiplicative import (
    Localization,
    MultSet,
    localize,
    mult_closure,
    trivial_mult_set,
    units_mult_set,
)
from ..rings.quotient import make_quotient

logger = logging.getLogger(__name__)


# =============================================================================
# RING LISTS
# =============================================================================

POLY_RINGS = [
    "Z/2[x]/(x^2+x+1)",
    "Z/2[x]/(x^3)",
    "Z/4[x]/(x^2)",
    "Z/9[x]/(x^2)",
    "Z/6[x]/(x^3)",
]

PRODUCT_RINGS = [
    "product(Z/4, Z/9)",
    "product(Z/8, Z/3)",
    "product(Z/12, Z/5)",
]

EXTRA_PRODUCTS = [
    "product(Z/2, Z/2)",
    "product(Z/4, Z/2)",
    "product(Z/2[x]/(x^2), Z/3)",
    "product(Z/9, Z/4)",
]

FIELDS = ["Z/2", "Z/3", "Z/5", "Z/7", "Z/11", "Z/2[x]/(x^2+x+1)"]

AMALGAM_BASES = ["Z/4", "Z/8", "Z/9"]


def amalgam_exprs(bases: list[str]) -> list[str]:
    """Amalgams over each base with the id and reduce maps and every ideal J."""
    exprs = []
    for base in bases:
        A = build_ring(parse(base))
        nil = radical(zero_ideal(A))
        targets = {"id": A, "reduce": make_quotient(A, nil)[0]}
        for hom, B in targets.items():
            for J in all_ideals(B):
                exprs.append(f"amalg({base}, {hom}, {render(J)})")
    return exprs


def default_rings() -> list[str]:
    return ([f"Z/{n}" for n in range(2, 37)] + POLY_RINGS + PRODUCT_RINGS
            + amalgam_exprs(AMALGAM_BASES))


def small_rings() -> list[str]:
    return ([f"Z/{n}" for n in range(2, 13)]
            + ["Z/2[x]/(x^3)", "Z/4[x]/(x^2)", "product(Z/2, Z/2)", "product(Z/2, Z/3)"]
            + amalgam_exprs(["Z/4"]))


CORPORA = {
    "default": default_rings,
    "small": small_rings,
    "products": lambda: PRODUCT_RINGS + EXTRA_PRODUCTS,
    "fields": lambda: list(FIELDS),
    "amalgams": lambda: amalgam_exprs(AMALGAM_BASES),
}


def random_rings(seed: int, count: int = 3, max_order: int = 64) -> list[str]:
    """Random products Z/m × Z/n, reproducible from ``seed``."""
    rng = np.random.default_rng(seed)
    exprs: list[str] = []
    while len(exprs) < count:
        m, n = (int(v) for v in rng.integers(2, 13, size=2))
        if m * n <= max_order:
            exprs.append(f"product(Z/{m}, Z/{n})")
    return exprs


def corpus_spec(name: str, *, rings: list[str] | None = None, seed: int | None = None,
                max_order: int | None = None, time_cap: float | None = None,
                n_max: int | None = None, policy: str = "family") -> CorpusSpec:
    settings = get_settings()
    if rings is None:
        if name not in CORPORA:
            known = ", ".join(sorted(CORPORA))
            raise PreconditionError(f"unknown corpus '{name}' (known: {known})")
        rings = CORPORA[name]()
    if seed is not None:
        rings = rings + random_rings(seed)
    return CorpusSpec(
        name=name,
        ring_exprs=rings,
        multset_policy=policy,
        n_max=n_max or settings.corpus_n_max,
        small_order=settings.small_order,
        max_order=max_order or settings.max_order,
        time_cap=time_cap or settings.time_cap,
    )


# =============================================================================
# RESOLVED CORPUS
# =============================================================================

# above this order the family uses associate representatives as generators
FULL_FAMILY_ORDER = 64


@dataclass
class CorpusEntry:
    expr: str
    ring: FiniteRing
    amalgamation: Amalgamation | None = None


@dataclass
class Corpus:
    spec: CorpusSpec
    entries: list[CorpusEntry] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        self._families: dict[FiniteRing, list[MultSet]] = {}
        self._verdicts: dict[tuple[Ideal, MultSet, int], Verdict] = {}
        self._omegas: dict[tuple[Ideal, MultSet], OmegaValue] = {}
        self._localizations: dict[MultSet, Localization] = {}
        self._locally_divided: dict[FiniteRing, bool] = {}

    @classmethod
    def build(cls, spec: CorpusSpec) -> Corpus:
        corpus = cls(spec)
        total = len(spec.ring_exprs)
        for i, expr in enumerate(spec.ring_exprs, 1):
            logger.debug("[%d/%d] %s...", i, total, expr)
            try:
                node = parse(expr)
                if isinstance(node, Amalg):
                    amal = build_amalgamation(node)
                    entry = CorpusEntry(expr, amal.ring, amal)
                else:
                    entry = CorpusEntry(expr, build_ring(node))
            except CapacityError as exc:
                logger.warning("skipping %s: %s", expr, exc)
                corpus.skipped.append(expr)
                continue
            if entry.ring.order > spec.max_order:
                logger.warning("skipping %s: order %d over %d", expr, entry.ring.order,
                               spec.max_order)
                corpus.skipped.append(expr)
                continue
            corpus.entries.append(entry)
        return corpus

    # --- families --------------------------------------------------------------

    def n_range(self, ring: FiniteRing) -> range:
        top = min(self.spec.n_range(ring.order).stop - 1, omega_bound(ring) + 1)
        return range(self.spec.n_min, max(self.spec.n_min, top) + 1)

    def family(self, ring: FiniteRing) -> list[MultSet]:
        """{1}, the units, and the closure of each nonzero nonunit non-nilpotent element."""
        if ring in self._families:
            return self._families[ring]
        policy = self.spec.multset_policy
        sets = [trivial_mult_set(ring)]
        if policy in ("family", "units"):
            sets.append(units_mult_set(ring))
        if policy == "family":
            pool = ring.nonunits if ring.order <= FULL_FAMILY_ORDER else ring.associate_reps
            for g in pool:
                if g != ring.zero and g not in ring.nilpotents:
                    sets.append(mult_closure(ring, [g]))
        unique = list(dict.fromkeys(sets))
        unique.sort(key=lambda s: (len(s), tuple(s)))
        self._families[ring] = unique
        return unique

    def ideals(self, ring: FiniteRing) -> tuple[Ideal, ...]:
        return all_ideals(ring)

    def disjoint(self, ring: FiniteRing, multset: MultSet) -> list[Ideal]:
        """Proper ideals missing S."""
        return [i for i in all_ideals(ring) if i.meets(multset.members) is None]

    # --- memoized queries ------------------------------------------------------

    def absorbing(self, ideal: Ideal, multset: MultSet, n: int) -> Verdict:
        key = (ideal, multset, n)
        if key not in self._verdicts:
            self._verdicts[key] = is_S_n_absorbing(ideal, multset, n, all_witnesses=True)
        return self._verdicts[key]

    def omega(self, ideal: Ideal, multset: MultSet) -> OmegaValue:
        key = (ideal, multset)
        if key not in self._omegas:
            self._omegas[key] = omega(ideal, multset)
        return self._omegas[key]

    def localization(self, multset: MultSet) -> Localization:
        if multset not in self._localizations:
            self._localizations[multset] = localize(multset.ring, multset)
        return self._localizations[multset]

    def locally_divided(self, ring: FiniteRing) -> bool:
        if ring not in self._locally_divided:
            self._locally_divided[ring] = locally_divided_verdict(ring).holds
        return self._locally_divided[ring]

