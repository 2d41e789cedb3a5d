"""Absorbing predicates, witnesses, counterexamples and omega."""
import pytest

from sabsorb.classify import (
    colon_stabilization_check,
    is_associated,
    is_n_absorbing,
    is_S_n_absorbing,
    is_S_n_absorbing_relaxed,
    is_S_n_absorbing_via_colon,
    minimal_s_n_absorbing_over,
    omega,
    omega_bound,
    omega_table,
    replay_counterexample,
    s_variant_predicates,
    time_cap,
)
from sabsorb.errors import NotDisjointError, PreconditionError, TimeCapExceeded
from sabsorb.rings.core import make_product, make_zmod
from sabsorb.rings.ideals import principal_ideal, unit_ideal, zero_ideal
from sabsorb.rings.multiplicative import mult_closure, trivial_mult_set, units_mult_set


@pytest.fixture
def four(z12):
    return mult_closure(z12, [4])


# =============================================================================
# PLAIN n-ABSORBING
# =============================================================================

def test_zero_of_z12_needs_three(z12):
    two = is_n_absorbing(zero_ideal(z12), 2)
    assert not two.holds
    assert two.counterexample == (2, 2, 3)
    assert is_n_absorbing(zero_ideal(z12), 3).holds


def test_prime_is_one_absorbing(z12):
    assert is_n_absorbing(principal_ideal(z12, 2), 1).holds


def test_n_absorbing_rejects_bad_input(z12):
    with pytest.raises(PreconditionError):
        is_n_absorbing(unit_ideal(z12), 1)
    with pytest.raises(PreconditionError):
        is_n_absorbing(zero_ideal(z12), 0)


def test_omega_bound():
    assert omega_bound(make_zmod(2)) == 1
    assert omega_bound(make_zmod(12)) == 3
    assert omega_bound(make_zmod(64)) == 6


# =============================================================================
# S-n-ABSORBING
# =============================================================================

def test_trivial_set_counterexample(z12):
    verdict = is_S_n_absorbing(zero_ideal(z12), trivial_mult_set(z12), 1)
    assert not verdict.holds
    assert verdict.counterexample == (2, 6)
    assert replay_counterexample(zero_ideal(z12), trivial_mult_set(z12), verdict.counterexample)


def test_witness_four_makes_zero_s_prime(z12, four):
    verdict = is_S_n_absorbing(zero_ideal(z12), four, 1, all_witnesses=True)
    assert verdict.holds
    assert verdict.witness_s == 4
    assert verdict.witnesses == (4,)
    assert is_associated(zero_ideal(z12), 4, 1).holds
    assert not is_associated(zero_ideal(z12), 1, 1).holds


def test_ideal_meeting_s_is_rejected(z12, four):
    with pytest.raises(NotDisjointError):
        is_S_n_absorbing(principal_ideal(z12, 2), four, 1)


def test_units_behave_like_plain_absorbing(z12):
    units = units_mult_set(z12)
    for n in (1, 2, 3):
        plain = is_n_absorbing(zero_ideal(z12), n)
        assert is_S_n_absorbing(zero_ideal(z12), units, n).holds == plain.holds


def test_strict_generalization(build):
    r, ideal, s = build("Z/6[x]/(x^3)", ("ideal", "ideal(2*x^2)"), ("multset", "mult(4)"))
    assert is_S_n_absorbing(ideal, s, 2).holds
    assert not is_n_absorbing(ideal, 2).holds
    assert not is_S_n_absorbing(ideal, s, 1).holds
    assert omega(ideal, s).value == 2


@pytest.mark.parametrize("ideal_gen,mult_gen", [(0, 1), (0, 4), (6, 4), (6, 1), (3, 1)])
@pytest.mark.parametrize("n", [1, 2])
def test_three_predicates_agree(z12, ideal_gen, mult_gen, n):
    ideal = principal_ideal(z12, ideal_gen)
    s = mult_closure(z12, [mult_gen])
    uniform = is_S_n_absorbing(ideal, s, n).holds
    assert is_S_n_absorbing_via_colon(ideal, s, n).holds == uniform
    assert is_S_n_absorbing_relaxed(ideal, s, n).holds == uniform


def test_replay_rejects_absorbed_tuple(z12):
    assert not replay_counterexample(zero_ideal(z12), trivial_mult_set(z12), (2, 3))
    assert not replay_counterexample(zero_ideal(z12), mult_closure(z12, [4]), (2, 6))


# =============================================================================
# OMEGA
# =============================================================================

def test_omega_values(z12):
    one = trivial_mult_set(z12)
    assert omega(zero_ideal(z12), one).value == 3
    assert omega(principal_ideal(z12, 2), one).value == 1
    assert omega(principal_ideal(z12, 6), one).value == 2


def test_omega_chained_ring(build):
    r = build("Z/2[x]/(x^3)")
    assert omega(zero_ideal(r), trivial_mult_set(r)).value == 3


@pytest.mark.parametrize("m, n, bound", [(8, 3, 4), (12, 5, 5)])
def test_omega_adds_over_products(m, n, bound):
    r = make_product(make_zmod(m), make_zmod(n))
    value = omega(zero_ideal(r), trivial_mult_set(r))
    assert value.value == 4
    assert value.bound_used == bound
    assert value.is_finite
    parts = [omega(zero_ideal(make_zmod(k)), trivial_mult_set(make_zmod(k))).value for k in (m, n)]
    assert value.value == sum(parts)


def test_omega_table(z12, four):
    table = omega_table(z12, trivial_mult_set(z12))
    assert len(table.values) == 5
    assert table.spectrum == {1, 2, 3}
    shrunk = omega_table(z12, four)
    assert set(shrunk.values) == {zero_ideal(z12), principal_ideal(z12, 6), principal_ideal(z12, 3)}
    assert shrunk.spectrum == {1}


# =============================================================================
# S-PRIMARY, MINIMAL IDEALS, COLONS
# =============================================================================

def test_s_variants_with_witness(z12, four):
    record = s_variant_predicates(zero_ideal(z12), four)
    assert record.S_prime.holds
    assert record.S_primary.holds
    assert record.strongly_S_primary.holds
    assert record.strongly_S_primary.witness_s == 4
    assert record.strong_exponent == 1


def test_s_variants_without_witness(z12):
    record = s_variant_predicates(zero_ideal(z12), trivial_mult_set(z12))
    assert not record.S_prime.holds
    assert not record.S_primary.holds
    assert not record.strongly_S_primary.holds
    assert record.strong_exponent is None


def test_primary_zero_of_z8(z8):
    record = s_variant_predicates(zero_ideal(z8), trivial_mult_set(z8))
    assert not record.S_prime.holds
    assert record.S_primary.holds
    assert record.strong_exponent == 3


def test_minimal_over_zero(z12):
    one = trivial_mult_set(z12)
    two = minimal_s_n_absorbing_over(zero_ideal(z12), one, 2)
    assert set(two) == {principal_ideal(z12, 4), principal_ideal(z12, 6)}
    primes = minimal_s_n_absorbing_over(zero_ideal(z12), one, 1)
    assert set(primes) == {principal_ideal(z12, 2), principal_ideal(z12, 3)}


def test_colon_stabilization(z12, four):
    assert colon_stabilization_check(zero_ideal(z12), four, 4, 1).holds
    assert colon_stabilization_check(zero_ideal(z12), four).holds
    with pytest.raises(PreconditionError):
        colon_stabilization_check(zero_ideal(z12), trivial_mult_set(z12), 1, 1)


def test_colon_stabilization_needs_omega():
    z24 = make_zmod(24)
    twos = mult_closure(z24, [2])
    zero = zero_ideal(z24)
    assert omega(zero, twos).value == 1
    assert colon_stabilization_check(zero, twos).holds
    # (0) is S-2-absorbing with s = 2, yet (0):4 and (0):8 still differ
    assert is_associated(zero, 2, 2).holds
    late = colon_stabilization_check(zero, twos, 2, 2)
    assert not late.holds
    assert late.counterexample == (2, 3)


def test_time_cap_stops_long_search():
    r = make_product(make_zmod(8), make_zmod(8))
    with pytest.raises(TimeCapExceeded):
        with time_cap(-1.0):
            is_n_absorbing(zero_ideal(r), 6)
