"""Amalgamated algebras and the transport of absorbing ideals through them."""
import pytest

from sabsorb.errors import CapacityError, PreconditionError
from sabsorb.rings.amalgam import (
    amalgamate,
    check_amalgam_disjointness,
    check_amalgam_transport,
    lift_mult_set,
    local_amalgam_hypotheses,
    local_maximal_ideal,
    special_ideals,
    verify_local_amalgam,
)
from sabsorb.rings.core import identity_hom, make_zmod
from sabsorb.rings.ideals import principal_ideal, unit_ideal, zero_ideal
from sabsorb.rings.multiplicative import trivial_mult_set, units_mult_set


@pytest.fixture
def z4():
    return make_zmod(4)


@pytest.fixture
def amal(z4):
    return amalgamate(z4, identity_hom(z4), principal_ideal(z4, 2))


def test_carrier_and_projections(amal):
    assert amal.ring.order == 8
    assert amal.ring.check_axioms() is None
    assert amal.pi1.is_surjective
    assert len(amal.kernel_pi1) == 2
    assert len(amal.kernel_pi2) == 2
    assert amal.inclusion.is_injective
    assert amal.ring.descriptor == "amalg(Z/4, id, ideal(2))"


def test_lift_and_offset(amal, z4):
    k = amal.lift(3)
    assert amal.pairs[k] == (3, 3)
    assert amal.offset(amal.index_of(1, 3)) == 2
    with pytest.raises(PreconditionError):
        amal.index_of(1, 2)
    assert lift_mult_set(units_mult_set(z4), amal).members == {amal.lift(1), amal.lift(3)}


def test_amalgam_with_unit_ideal_is_product(z4):
    full = amalgamate(z4, identity_hom(z4), unit_ideal(z4))
    assert full.ring.order == 16
    assert len(full.ring.units) == 4


def test_amalgam_cap(z4):
    with pytest.raises(CapacityError):
        amalgamate(z4, identity_hom(z4), unit_ideal(z4), cap=8)


def test_special_ideals(amal, z4):
    special = special_ideals(amal, principal_ideal(z4, 2))
    assert len(special.I_bowtie_J) == 4
    assert special.K_bar.members == amal.kernel_pi2
    assert len(special.IxK_bar) == 2
    assert special.I_bowtie_H == special.I_bowtie_J


def test_special_ideals_need_f_i_j_inside_h(amal, z4):
    sub, _ = amal.subring
    with pytest.raises(PreconditionError):
        special_ideals(amal, unit_ideal(z4), H=zero_ideal(sub))


def test_disjointness_and_transport(amal, z4):
    sub, _ = amal.subring
    one = trivial_mult_set(z4)
    I, K = principal_ideal(z4, 2), zero_ideal(sub)
    assert check_amalgam_disjointness(amal, I, K, one).holds
    for m in (1, 2):
        for n in (1, 2):
            assert check_amalgam_transport(amal, I, K, one, m, n).holds


def test_local_maximal_ideal(amal, z4):
    assert local_maximal_ideal(amal) == principal_ideal(z4, 2)
    z6 = make_zmod(6)
    with pytest.raises(PreconditionError):
        local_maximal_ideal(amalgamate(z6, identity_hom(z6), zero_ideal(z6)))


def test_local_amalgam(amal, z4):
    sub, _ = amal.subring
    one = trivial_mult_set(z4)
    I, H = principal_ideal(z4, 2), zero_ideal(sub)
    assert local_amalgam_hypotheses(amal, I, H, one, 1, 2) == principal_ideal(z4, 2)
    verdict = verify_local_amalgam(amal, I, H, one, 1, 2)
    assert verdict.holds
    assert verdict.witness_s == 1


def test_local_amalgam_hypothesis_failures(amal, z4):
    sub, _ = amal.subring
    one = trivial_mult_set(z4)
    with pytest.raises(PreconditionError):
        # 3 is not in S
        local_amalgam_hypotheses(amal, principal_ideal(z4, 2), zero_ideal(sub), one, 3, 2)
    with pytest.raises(PreconditionError):
        # f(1)J is not inside (0)
        local_amalgam_hypotheses(amal, principal_ideal(z4, 2), zero_ideal(sub), one, 1, 1)
