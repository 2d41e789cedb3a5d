"""Multiplicative sets, saturation and localization."""
import itertools

import pytest

from sabsorb.errors import (
    HomomorphismError,
    LocalizationIsZeroError,
    NotDisjointError,
    PreconditionError,
)
from sabsorb.rings.core import make_hom, make_product, make_zmod
from sabsorb.rings.ideals import principal_ideal, unit_ideal, zero_ideal
from sabsorb.rings.multiplicative import (
    complement_mult_set,
    extend_ideal,
    image_mult_set,
    is_strongly_multiplicative,
    localize,
    mult_closure,
    mult_product,
    product_mult_set,
    sat_ideal,
    saturate_multset,
    trivial_mult_set,
    units_mult_set,
)


def test_closure(z12):
    assert mult_closure(z12, [4]).members == {1, 4}
    without_one = mult_closure(z12, [2], include_one=False)
    assert without_one.members == {2, 4, 8}
    assert not without_one.contains_one
    assert mult_closure(z12, [6]).contains_zero
    with pytest.raises(PreconditionError):
        mult_closure(z12, [], include_one=False)


def test_units_and_complement(z12):
    assert len(units_mult_set(z12)) == 4
    assert complement_mult_set(principal_ideal(z12, 3)).members == {1, 2, 4, 5, 7, 8, 10, 11}
    with pytest.raises(PreconditionError):
        complement_mult_set(principal_ideal(z12, 6))


def test_saturation(z12):
    saturated = saturate_multset(mult_closure(z12, [4]))
    assert saturated.members == {1, 2, 4, 5, 7, 8, 10, 11}


def test_closure_is_strongly_multiplicative_with_product_witness(z12):
    verdict = is_strongly_multiplicative(mult_closure(z12, [4]))
    assert verdict.holds and verdict.witness_s == 4
    assert is_strongly_multiplicative(units_mult_set(z12)).witness_s == 1


def test_sat_ideal(z12):
    sat, t = sat_ideal(zero_ideal(z12), mult_closure(z12, [4]))
    assert sat == principal_ideal(z12, 3)
    assert t == 4
    with pytest.raises(NotDisjointError) as info:
        sat_ideal(principal_ideal(z12, 2), mult_closure(z12, [4]))
    assert info.value.element == 4


def test_products_of_sets(z12):
    combined = mult_product(mult_closure(z12, [4]), units_mult_set(z12))
    assert combined.members == {1, 4, 5, 7, 8, 11}
    r = make_product(make_zmod(4), make_zmod(9))
    s = product_mult_set(r, units_mult_set(make_zmod(4)), trivial_mult_set(make_zmod(9)))
    assert len(s) == 2
    with pytest.raises(PreconditionError):
        product_mult_set(z12, trivial_mult_set(z12), trivial_mult_set(z12))


def test_image_of_set(z12):
    hom = make_hom(z12, make_zmod(3), [x % 3 for x in range(12)])
    assert image_mult_set(mult_closure(z12, [4]), hom).members == {1}


def test_localization(z12):
    loc = localize(z12, mult_closure(z12, [4]))
    assert loc.ring.order == 3
    assert loc.kernel == principal_ideal(z12, 3)
    assert loc.canonical(4) == 1
    assert loc.canonical(4) in loc.ring.units


def _homs(source, target):
    """Every unital ring homomorphism source → target, by table search."""
    free = [x for x in range(source.order) if x not in (source.zero, source.one)]
    for values in itertools.product(range(target.order), repeat=len(free)):
        table = [0] * source.order
        table[source.zero], table[source.one] = target.zero, target.one
        for x, v in zip(free, values):
            table[x] = v
        try:
            yield make_hom(source, target, table)
        except HomomorphismError:
            continue


@pytest.mark.parametrize("ring_text, mult_text, targets", [
    ("Z/6", "mult(3)", ["Z/2", "Z/3", "Z/6"]),
    ("Z/4", "mult(3)", ["Z/2", "Z/4"]),
    ("product(Z/2, Z/2)", "mult((1,0))", ["Z/2", "Z/4", "product(Z/2, Z/2)"]),
])
def test_localization_universal_property(build, ring_text, mult_text, targets):
    ring, multset = build(ring_text, ("multset", mult_text))
    loc = localize(ring, multset)
    for target_text in targets:
        target = build(target_text)
        inverting = sorted(g.table for g in _homs(ring, target)
                           if all(g(s) in target.units for s in multset))
        # each such map factors through R -> R_S in exactly one way
        through = sorted(tuple(h(loc.canonical(x)) for x in range(ring.order))
                         for h in _homs(loc.ring, target))
        assert through == inverting, target_text
        assert len(set(through)) == len(through)


def test_localization_at_zero_divisor_set(z12):
    with pytest.raises(LocalizationIsZeroError):
        localize(z12, mult_closure(z12, [6]))


def test_extension_and_contraction(z12):
    loc = localize(z12, mult_closure(z12, [4]))
    assert extend_ideal(principal_ideal(z12, 6), loc) == zero_ideal(loc.ring)
    # (2) meets S, so it extends to the whole ring
    assert extend_ideal(principal_ideal(z12, 2), loc) == unit_ideal(loc.ring)
