import hypothesis
import pytest

from filtrum.errors import (CapExceeded, CarrierMismatch, NoZeroElement, NotDisjoint,
                            NotMultiplicativelyClosed, NotPseudoideal, ZeroEqualsOne)
from filtrum.filters import (Filter, all_filters, generate, is_consistent, is_filter, is_reduced,
                             maximal_filters_avoiding, nilpotent, principal_filter, ultrafilter_criterion,
                             ultrafilters, units_filter)
from filtrum.monoid import bit, bits, cyclic_group, trivial_monoid, zn_monoid
from filtrum.ring import boolean_ring
from tests.strategies import monoids

Z6_FILTERS = [bits([1, 5]), bits([1, 3, 5]), bits([1, 2, 4, 5]), bits(range(6))]


def test_z6_filters():
    family = all_filters(zn_monoid(6))
    assert family.masks == Z6_FILTERS
    assert [F.label() for F in family] == ['{1,5}', '{1,3,5}', '{1,2,4,5}', '{0,1,2,3,4,5}']


def test_filter_order_is_inclusion():
    M = zn_monoid(6)
    odd, coprime = Filter(M, bits([1, 3, 5])), Filter(M, bits([1, 2, 4, 5]))
    assert not odd <= coprime
    assert not coprime <= odd
    assert Filter(M, bits([1, 5])) <= odd <= Filter(M, M.full)
    with pytest.raises(TypeError):
        sorted([coprime, odd])


@pytest.mark.parametrize('M, count', [
    (trivial_monoid(), 1),
    (zn_monoid(4), 2),
    (zn_monoid(6), 4),
    (boolean_ring(2).monoid, 4),
    (boolean_ring(3).monoid, 8),
    (cyclic_group(4), 1),
])
def test_filter_counts(M, count):
    assert len(all_filters(M)) == count
    assert len(all_filters(M, method='oracle')) == count


def test_axioms_are_reported_in_order():
    M = zn_monoid(6)
    check = is_filter(M, bits([2, 4]))
    assert not check and check.axiom == 1
    check = is_filter(M, bits([1, 2]))
    assert not check and check.axiom == 3 and check.witness == (5, 1)
    B = boolean_ring(2).monoid
    check = is_filter(B, bits([1, 2, 3]))
    assert not check and check.axiom == 2 and check.witness == (1, 2)
    assert is_filter(M, bits([1, 3, 5]))


def test_generation():
    M = zn_monoid(6)
    assert generate(M, bit(2)).members == bits([1, 2, 4, 5])
    assert generate(M, 0) == units_filter(M)
    assert principal_filter(M, 3).members == bits([1, 3, 5])
    assert principal_filter(M, 0).members == M.full


def test_enumeration_caps():
    with pytest.raises(CapExceeded):
        all_filters(zn_monoid(30))
    with pytest.raises(CapExceeded):
        all_filters(zn_monoid(17), method='oracle')
    assert len(all_filters(zn_monoid(30), cap=30)) == 8


def test_oracle_is_worker_independent():
    M = zn_monoid(12)
    assert all_filters(M, method='oracle', workers=4).masks == all_filters(M, method='oracle', workers=1).masks


def test_ultrafilters():
    assert ultrafilters(zn_monoid(6)).masks == [bits([1, 3, 5]), bits([1, 2, 4, 5])]
    assert ultrafilters(zn_monoid(4)).masks == [bits([1, 3])]
    assert len(ultrafilters(boolean_ring(3).monoid)) == 3
    with pytest.raises(NoZeroElement):
        ultrafilters(cyclic_group(3))
    with pytest.raises(ZeroEqualsOne):
        ultrafilters(trivial_monoid())


def test_ultrafilter_criterion():
    M = zn_monoid(6)
    assert ultrafilter_criterion(M, bits([1, 3, 5]))
    assert not ultrafilter_criterion(M, bits([1, 5]))
    with pytest.raises(CarrierMismatch):
        ultrafilter_criterion(M, Filter(zn_monoid(4), bits([1, 3])))


def test_consistency_and_nilpotence():
    M = zn_monoid(4)
    assert is_consistent(Filter(M, bits([1, 3])))
    assert not is_consistent(Filter(M, M.full))
    assert nilpotent(M, 2) and not nilpotent(M, 3)
    assert not is_reduced(M)
    assert is_reduced(zn_monoid(6))
    assert is_consistent(Filter(cyclic_group(2), 0b11))


def test_maximal_filters_avoiding_zero():
    M = zn_monoid(6)
    assert maximal_filters_avoiding(M, M.units, bit(0)).masks == ultrafilters(M).masks


def test_maximal_filters_avoiding_rejects_bad_input():
    M = zn_monoid(6)
    with pytest.raises(NotMultiplicativelyClosed):
        maximal_filters_avoiding(M, bits([1, 2, 3]), bit(0))
    with pytest.raises(NotPseudoideal):
        maximal_filters_avoiding(M, M.units, bit(2))
    with pytest.raises(NotDisjoint):
        maximal_filters_avoiding(M, M.units, M.full)


@hypothesis.given(monoids)
def test_enumerated_sets_are_filters(M):
    for F in all_filters(M):
        assert is_filter(M, F)
        assert F.members & M.units == M.units
        assert generate(M, F) == F


@hypothesis.given(monoids)
def test_closure_equals_oracle(M):
    assert all_filters(M).masks == all_filters(M, method='oracle').masks


@hypothesis.given(monoids)
def test_filter_order_matches_masks(M):
    family = all_filters(M)
    for F in family:
        for G in family:
            assert (F <= G) == (F.members & ~G.members == 0)
