import logging

import hypothesis
import pytest

from filtrum.errors import (BadIdentity, BadZero, NoZeroElement, NonAssociative, NonCommutative,
                            NotAHom, ShapeError, SizeOverflow)
from filtrum.monoid import (bits, compose, divides, find_isomorphism, fraction_monoid, free_truncated_monoid,
                            identity_hom, members, nonzerodivisors, principal_quotient, product_monoid,
                            semilattice_chain, validate_hom, validate_monoid, zn_monoid, cyclic_group)
from filtrum.ring import boolean_ring
from tests.strategies import monoids


def test_zn_monoid_table():
    M = zn_monoid(6)
    assert M(2, 3) == 0
    assert M(5, 5) == 1
    assert M.units == bits([1, 5])


def test_nonassociative_witness():
    with pytest.raises(NonAssociative) as exc:
        validate_monoid([[0, 1, 2], [1, 2, 2], [2, 2, 1]], 0)
    assert (exc.value.x, exc.value.y, exc.value.z) == (1, 1, 2)
    assert exc.value.exit_code == 1


def test_noncommutative_witness():
    with pytest.raises(NonCommutative) as exc:
        validate_monoid([[0, 1, 2], [1, 1, 1], [2, 2, 2]], 0)
    assert (exc.value.x, exc.value.y) == (1, 2)


def test_bad_identity_and_zero():
    with pytest.raises(BadIdentity):
        validate_monoid([[0, 0], [0, 1]], 0)
    with pytest.raises(BadZero):
        validate_monoid([[0, 0], [0, 1]], 1, zero=1)


def test_ragged_table():
    with pytest.raises(ShapeError):
        validate_monoid([[0, 1], [1]], 0)
    with pytest.raises(ShapeError):
        validate_monoid([[0, 1], [1, 0]], 2)


def test_undeclared_zero_is_logged(caplog):
    with caplog.at_level(logging.WARNING):
        M = validate_monoid([[0, 0], [0, 1]], 1, name='Z2')
    assert M.zero is None
    assert 'undeclared annihilator' in caplog.text


def test_divides():
    M = zn_monoid(6)
    assert divides(M, 2, 4)
    assert divides(M, 5, 3)
    assert not divides(M, 3, 2)
    assert all(divides(M, g, 0) for g in range(6))


def test_nonzerodivisors():
    assert members(nonzerodivisors(zn_monoid(6))) == [1, 5]
    assert members(nonzerodivisors(zn_monoid(5))) == [1, 2, 3, 4]
    with pytest.raises(NoZeroElement):
        nonzerodivisors(cyclic_group(3))


def test_product_monoid_is_row_major():
    P, p1, p2 = product_monoid(zn_monoid(2), zn_monoid(3))
    assert P.size == 6
    assert P.one == 1 * 3 + 1
    assert P.zero == 0
    assert p1.map == (0, 0, 0, 1, 1, 1)
    assert p2.map == (0, 1, 2, 0, 1, 2)


def test_product_size_overflow():
    with pytest.raises(SizeOverflow) as exc:
        product_monoid(zn_monoid(12), zn_monoid(12), cap=100)
    assert exc.value.exit_code == 3


def test_fraction_monoid_inverting_two():
    M = zn_monoid(6)
    fractions, h = fraction_monoid(M, bits([1, 2, 4, 5]))
    assert fractions.size == 3
    assert fractions.mul == zn_monoid(3).mul
    assert h.map == (0, 1, 2, 0, 1, 2)


def test_fraction_monoid_at_units_changes_nothing():
    M = zn_monoid(8)
    fractions, h = fraction_monoid(M, M.units)
    assert fractions.size == M.size
    assert find_isomorphism(M, fractions) is not None


def test_principal_quotient():
    quotient, h = principal_quotient(zn_monoid(6))
    assert quotient.size == 4
    assert h.map == (0, 1, 2, 3, 2, 1)
    assert quotient.zero == 0 and quotient.one == 1


def test_find_isomorphism():
    B2 = boolean_ring(2).monoid
    P, _, _ = product_monoid(zn_monoid(2), zn_monoid(2))
    iso = find_isomorphism(B2, P)
    assert iso is not None
    assert all(P.mul[iso[x]][iso[y]] == iso[B2.mul[x][y]] for x in range(4) for y in range(4))
    assert find_isomorphism(zn_monoid(4), semilattice_chain(4)) is None


def test_free_truncated_monoid():
    M, vectors = free_truncated_monoid(2, 2)
    assert M.size == 9
    assert vectors[4] == (1, 1)
    assert M.one == 0
    assert M.zero is None
    assert M(4, 4) == vectors.index((2, 2))


def test_validate_hom():
    h = validate_hom(zn_monoid(6), zn_monoid(3), [0, 1, 2, 0, 1, 2])
    assert h(4) == 1
    assert h.is_surjective and h.preserves_zero
    with pytest.raises(NotAHom):
        validate_hom(zn_monoid(6), zn_monoid(3), [0, 2, 1, 0, 2, 1])
    with pytest.raises(ShapeError):
        validate_hom(zn_monoid(6), zn_monoid(3), [0, 1, 2])


def test_compose():
    psi = validate_hom(zn_monoid(6), zn_monoid(3), [0, 1, 2, 0, 1, 2])
    phi = validate_hom(zn_monoid(12), zn_monoid(6), [x % 6 for x in range(12)])
    assert compose(psi, phi).map == tuple(x % 3 for x in range(12))
    with pytest.raises(NotAHom):
        compose(phi, psi)


@hypothesis.given(monoids)
def test_identity_hom_is_a_hom(M):
    h = identity_hom(M)
    assert validate_hom(M, M, list(h.map)) == h


@hypothesis.given(monoids)
def test_principal_quotient_is_surjective(M):
    quotient, h = principal_quotient(M)
    assert h.is_surjective
    assert validate_hom(M, quotient, list(h.map)) == h
