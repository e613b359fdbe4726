import pytest

from filtrum.corpus import corpus_rings
from filtrum.errors import (BadNegation, NonDistributive, NotAnIdeal, NotBoolean, SizeOverflow,
                            ZeroRing)
from filtrum.filters import Filter, all_filters
from filtrum.monoid import bits, members, zn_monoid
from filtrum.ring import (Ideal, all_ideals, boolean_ideal_filter_correspondence, boolean_ring,
                          filter_complement_decomposition, fix_modulo_ideal, fixness_modulo, fraction_kernel,
                          ideal_generated, minimal_prime_ultrafilter_duality, minimal_primes,
                          minimal_primes_over, mult_monoid, nilradical, one_minus, prime_ideals, product_ring,
                          quotient_ring, smallest_fix_filter, validate_ring, zn_ring)

Z6_ADD = [[(x + y) % 6 for y in range(6)] for x in range(6)]
Z6_MUL = [[(x * y) % 6 for y in range(6)] for x in range(6)]


def test_validate_ring_derives_zero_and_one():
    R = validate_ring(Z6_ADD, Z6_MUL, name='Z6')
    assert (R.zero, R.one) == (0, 1)
    assert R.neg == (0, 5, 4, 3, 2, 1)
    assert R.monoid.zero == 0


def test_validate_ring_rejects_bad_tables():
    with pytest.raises(NonDistributive):
        validate_ring([[0, 1], [1, 0]], [[0, 1], [1, 1]])
    with pytest.raises(BadNegation):
        validate_ring([[0, 1], [1, 1]], [[0, 0], [0, 1]])


def test_mult_monoid():
    M = mult_monoid(zn_ring(6))
    assert (M.size, M.one, M.zero) == (6, 1, 0)
    assert M.mul == zn_monoid(6).mul
    assert all_filters(M).masks == [bits([1, 5]), bits([1, 3, 5]), bits([1, 2, 4, 5]), bits(range(6))]
    assert mult_monoid(boolean_ring(2)).units == bits([3])


def test_product_ring_cap():
    with pytest.raises(SizeOverflow):
        product_ring(zn_ring(6), zn_ring(7))


def test_ideals_of_z6():
    R = zn_ring(6)
    assert [a.members for a in all_ideals(R)] == [bits([0]), bits([0, 3]), bits([0, 2, 4]), R.full]
    assert [a.members for a in all_ideals(R, method='oracle')] == [a.members for a in all_ideals(R)]
    assert [p.elements() for p in prime_ideals(R)] == [[0, 3], [0, 2, 4]]
    assert ideal_generated(R, bits([2])).members == bits([0, 2, 4])
    assert ideal_generated(R, bits([2, 3])).members == R.full


def test_nilradical_and_minimal_primes():
    R = zn_ring(4)
    assert nilradical(R).elements() == [0, 2]
    assert [p.elements() for p in minimal_primes(R)] == [[0, 2]]
    R = zn_ring(12)
    assert [p.elements() for p in minimal_primes_over(R, bits([0, 4, 8]))] == [[0, 2, 4, 6, 8, 10]]
    assert len(minimal_primes_over(R, bits([0, 6]))) == 2


def test_complement_decomposition():
    R = zn_ring(6)
    primes = filter_complement_decomposition(R, bits([1, 5]))
    assert [p.elements() for p in primes] == [[0, 3], [0, 2, 4]]
    primes = filter_complement_decomposition(R, bits([1, 3, 5]))
    assert [p.elements() for p in primes] == [[0, 2, 4]]


def test_minimal_prime_ultrafilter_duality():
    assert minimal_prime_ultrafilter_duality(zn_ring(6))
    assert minimal_prime_ultrafilter_duality(boolean_ring(3))
    with pytest.raises(ZeroRing):
        minimal_prime_ultrafilter_duality(zn_ring(1))


def test_boolean_correspondence():
    R = boolean_ring(2)
    assert one_minus(R, bits([0])) == bits([3])
    assert boolean_ideal_filter_correspondence(R)
    assert boolean_ideal_filter_correspondence(boolean_ring(3))
    with pytest.raises(NotBoolean):
        boolean_ideal_filter_correspondence(zn_ring(4))


def test_quotient_ring():
    Q, h = quotient_ring(zn_ring(6), bits([0, 3]))
    assert Q.size == 3
    assert h.map == (0, 1, 2, 0, 1, 2)
    assert Q.mul == zn_ring(3).mul
    with pytest.raises(NotAnIdeal):
        quotient_ring(zn_ring(6), bits([0, 1]))


def test_fix_modulo_ideal():
    R = zn_ring(6)
    a = bits([0, 3])
    assert not fix_modulo_ideal(R, a, bits([1, 5]))
    assert fix_modulo_ideal(R, a, bits([1, 2, 4, 5]))
    assert smallest_fix_filter(R, a).members == bits([1, 2, 4, 5])
    assert fraction_kernel(R, bits([1, 2, 4, 5])).members == a


def test_fixness_modulo():
    verdict = fixness_modulo(zn_ring(6), bits([0, 3]))
    assert (verdict.all_filters, verdict.prime_complements) == (False, False)
    R = zn_ring(4)
    verdict = fixness_modulo(R, nilradical(R))
    assert (verdict.all_filters, verdict.prime_complements) == (True, True)


@pytest.mark.parametrize('instance', corpus_rings(), ids=lambda instance: instance.name)
def test_corpus_ring_decomposition(instance):
    R = instance.value
    for F in all_filters(mult_monoid(R)):
        union = 0
        for p in filter_complement_decomposition(R, F):
            union |= p.members
        assert union == R.full & ~F.members
    assert minimal_prime_ultrafilter_duality(R)


@pytest.mark.parametrize('instance', corpus_rings(), ids=lambda instance: instance.name)
def test_corpus_ring_fixness(instance):
    R = instance.value
    for a in all_ideals(R):
        base = smallest_fix_filter(R, a)
        assert fix_modulo_ideal(R, a, base)
        for p in prime_ideals(R):
            assert fix_modulo_ideal(R, a, p.complement()) == (a.members & ~p.members == 0)
    nil = nilradical(R)
    assert all(fix_modulo_ideal(R, nil, F) for F in all_filters(mult_monoid(R)))


def test_ideal_complement_is_a_filter_for_primes():
    R = zn_ring(12)
    for p in prime_ideals(R):
        assert isinstance(p, Ideal)
        assert mult_monoid(R).filter_violation(p.complement()) is None
        assert Filter(mult_monoid(R), p.complement()).elements() == members(p.complement())
