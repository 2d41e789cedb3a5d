"""Ring constructions, element arithmetic and homomorphisms."""
import math

import pytest

from sabsorb.config import configure
from sabsorb.errors import (
    CapacityError,
    HomomorphismError,
    InvalidOrderError,
    UnsupportedModulusError,
)
from sabsorb.harness.corpus import default_rings
from sabsorb.rings.core import (
    check_poly_degree,
    constant_embedding,
    identity_hom,
    make_hom,
    make_poly_quotient,
    make_product,
    make_zmod,
    pair_index,
    projections,
)
from sabsorb.rings.ideals import principal_ideal
from sabsorb.rings.quotient import make_quotient


def test_zmod_units_and_order(z12):
    assert z12.order == 12
    assert z12.units == {1, 5, 7, 11}
    assert z12.check_axioms() is None


def test_zmod_rejects_trivial_ring():
    with pytest.raises(InvalidOrderError):
        make_zmod(1)


def test_order_cap_from_settings():
    with pytest.raises(CapacityError):
        make_zmod(300)
    configure(max_order=512)
    assert make_zmod(300).order == 300


def test_explicit_cap_wins():
    with pytest.raises(CapacityError) as info:
        make_zmod(20, cap=16)
    assert info.value.order == 20 and info.value.cap == 16


def test_nilpotents_and_jacobson_index(z8):
    assert z8.nilpotents == {0, 2, 4, 6}
    assert z8.jacobson_nilpotency == 3
    assert make_zmod(6).jacobson_nilpotency == 1


def test_associate_reps(z12):
    # orbits of nonunits under {1,5,7,11}: {0}, {2,10}, {3,9}, {4,8}, {6}
    assert z12.associate_reps == (0, 2, 3, 4, 6)
    assert make_zmod(7).associate_reps == (0,)


def test_product_ring():
    r = make_product(make_zmod(4), make_zmod(9))
    assert r.order == 36
    assert len(r.units) == 12
    assert r.check_axioms() is None
    assert r.labels[pair_index(r, 2, 5)] == "(2,5)"
    pi1, pi2 = projections(r)
    assert pi1(pair_index(r, 3, 7)) == 3
    assert pi2(pair_index(r, 3, 7)) == 7
    assert len(pi1.kernel) == 9


def test_poly_quotient_arithmetic():
    base = make_zmod(6)
    r = make_poly_quotient(base, [0, 0, 1])
    assert r.descriptor == "Z/6[x]/(x^2)"
    assert r.order == 36
    assert r.check_axioms() is None
    # 2x+3 has index 3 + 2*6
    e = r.element(15)
    assert str(e) == "2*x+3"
    assert (e ** 2).index == 3


def test_poly_quotient_field():
    r = make_poly_quotient(make_zmod(2), [1, 1, 1])
    assert r.is_field
    assert r.descriptor == "Z/2[x]/(x^2+x+1)"


def test_poly_quotient_needs_monic_modulus():
    with pytest.raises(UnsupportedModulusError):
        make_poly_quotient(make_zmod(4), [1, 0, 2])
    with pytest.raises(UnsupportedModulusError):
        make_poly_quotient(make_zmod(4), [3])


def test_constant_embedding_is_injective():
    r = make_poly_quotient(make_zmod(4), [0, 0, 1])
    emb = constant_embedding(r)
    assert emb.is_injective
    assert emb(3) == 3


def test_quotient_ring(z12):
    q, proj = make_quotient(z12, principal_ideal(z12, 3))
    assert q.order == 3
    assert proj(4) == 1
    assert proj.is_surjective
    assert q.check_axioms() is None


def test_quotient_by_zero_is_identity(z12):
    q, proj = make_quotient(z12, principal_ideal(z12, 0))
    assert q is z12
    assert proj == identity_hom(z12)


def test_make_hom_rejects_negation():
    z4 = make_zmod(4)
    with pytest.raises(HomomorphismError) as info:
        make_hom(z4, z4, [0, 3, 2, 1])
    assert info.value.law == "unitality"


def test_make_hom_reduction():
    hom = make_hom(make_zmod(12), make_zmod(4), [x % 4 for x in range(12)])
    assert hom.is_surjective
    assert hom.kernel == {0, 4, 8}


def test_element_operators(z12):
    a, b = z12.element(5), z12.element(9)
    assert (a + b).index == 2
    assert (a - b).index == 8
    assert (a * b).index == 9
    assert (-a).index == 7
    assert a.is_unit and not b.is_unit


def test_poly_degree_is_rejected_before_the_order_is_computed():
    with pytest.raises(CapacityError) as info:
        make_poly_quotient(make_zmod(2), [0] * 30000 + [1])
    assert info.value.order is None
    assert len(str(info.value)) < 200
    with pytest.raises(CapacityError):
        check_poly_degree(make_zmod(2), 3_000_000_000)
    assert check_poly_degree(make_zmod(2), 8) == 256
    with pytest.raises(UnsupportedModulusError):
        check_poly_degree(make_product(make_zmod(2), make_zmod(3)), 2)


# =============================================================================
# INVARIANTS OVER MANY RINGS
# =============================================================================

def _totient(m):
    return sum(1 for k in range(1, m + 1) if math.gcd(k, m) == 1)


@pytest.mark.parametrize("m, n", [(3, 4), (4, 9), (8, 3), (5, 12), (7, 9), (11, 8)])
def test_unit_count_of_coprime_product(m, n):
    r = make_product(make_zmod(m), make_zmod(n))
    assert len(r.units) == _totient(m) * _totient(n)


def test_jacobson_nilpotency_is_logarithmic(build):
    for text in default_rings():
        ring = build(text)
        assert ring.jacobson_nilpotency <= math.floor(math.log2(ring.order)), text
