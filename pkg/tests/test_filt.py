import hypothesis
import pytest

from filtrum.errors import CapExceeded, CarrierMismatch, NotAFilter
from filtrum.filt import (basis_union, build_filtrum, consistent_subspace, filtrum_space, fixfilter_homeomorphism,
                          fixfilters, is_open, open_sets, product_homeomorphism, pullback, pullback_map,
                          pushforward, pushforward_map, ultrafilter_subspace)
from filtrum.filters import Filter, all_filters
from filtrum.monoid import bit, bits, validate_hom, zn_monoid
from filtrum.ring import boolean_ring
from filtrum.space import find_homeomorphism, is_connected, is_hausdorff, is_quasicompact, is_t0, sierpinski
from tests.strategies import small_monoids


@pytest.fixture
def z6():
    return build_filtrum(zn_monoid(6))


@pytest.fixture
def reduction():
    return validate_hom(zn_monoid(6), zn_monoid(3), [0, 1, 2, 0, 1, 2])


def test_points_and_basis(z6):
    assert len(z6) == 4
    assert z6.labels == ('{1,5}', '{1,3,5}', '{1,2,4,5}', '{0,1,2,3,4,5}')
    assert z6.basis == (0b1000, 0b1111, 0b1100, 0b1010, 0b1100, 0b1111)
    assert z6.principal_point == (3, 0, 2, 1, 2, 0)
    assert basis_union(z6, bits([2, 3])) == 0b1110


def test_distinguished_points(z6):
    assert z6.closed_points == 0b0001
    assert z6.consistent_points == 0b0111
    assert z6.ultrafilter_points == 0b0110
    with pytest.raises(NotAFilter):
        z6.point(bits([1, 2]))


def test_opens(z6):
    assert open_sets(z6) == (0, 0b1000, 0b1010, 0b1100, 0b1110, 0b1111)
    assert is_open(z6, 0b1100)
    assert not is_open(z6, 0b0100)
    with pytest.raises(CapExceeded):
        open_sets(z6, cap=3)


def test_z4_filtrum_is_sierpinski():
    X = filtrum_space(build_filtrum(zn_monoid(4)))
    assert find_homeomorphism(X, sierpinski()) is not None


def test_point_cap():
    with pytest.raises(CapExceeded):
        build_filtrum(boolean_ring(3).monoid, cap=4)


def test_subspaces(z6):
    consistent, index = consistent_subspace(z6)
    assert consistent.size == 3 and tuple(index) == (0, 1, 2)
    ultra, _ = ultrafilter_subspace(z6)
    assert ultra.size == 2 and is_hausdorff(ultra)


def test_pushforward_and_pullback(reduction):
    units = Filter(zn_monoid(6), bits([1, 5]))
    image = pushforward(reduction, units)
    assert image.members == bits([1, 2])
    assert pullback(reduction, image).members == bits([1, 2, 4, 5])
    with pytest.raises(CarrierMismatch):
        pushforward(reduction, Filter(zn_monoid(4), bits([1, 3])))


def test_pullback_map(reduction):
    Phi, Psi = build_filtrum(zn_monoid(6)), build_filtrum(zn_monoid(3))
    assert pullback_map(reduction, Phi, Psi) == (2, 3)
    assert pushforward_map(reduction, Phi, Psi) == (0, 1, 0, 1)


def test_fixfilters_of_a_localization(reduction):
    result = fixfilters(reduction)
    assert [F.members for F in result.source] == [bits([1, 2, 4, 5]), bits(range(6))]
    assert [G.members for G in result.target] == [bits([1, 2]), bits(range(3))]
    assert result.certificate
    assert fixfilter_homeomorphism(reduction)


def test_identity_fixes_everything():
    M = zn_monoid(12)
    result = fixfilters(validate_hom(M, M, list(range(12))))
    assert len(result.source) == len(result.target) == len(all_filters(M))


def test_product_homeomorphism():
    result = product_homeomorphism(zn_monoid(2), zn_monoid(3))
    assert len(result.pairs) == 4
    assert result.certificate


@hypothesis.given(small_monoids)
def test_filtrum_is_t0_quasicompact_connected(M):
    Phi = build_filtrum(M)
    X = filtrum_space(Phi)
    assert is_t0(X) and is_quasicompact(X) and is_connected(X)
    assert Phi.closed_points == bit(Phi.point(M.units))


@hypothesis.given(small_monoids, small_monoids)
def test_product_theorem(M1, M2):
    result = product_homeomorphism(M1, M2)
    assert result.certificate
    assert len(result.pairs) == len(all_filters(M1)) * len(all_filters(M2))
