import pytest

from filtrum.errors import (CapExceeded, DivisionByZero, DocumentError, FiltrumError, LawViolation,
                            NonAssociative, NotContinuous, SizeOverflow, ValidationError)


def test_diagnostic_fields():
    exc = NonAssociative('(x*y)*z != x*(y*z)', x=1, y=1, z=2)
    assert exc.to_dict() == {'error': 'NonAssociative', 'message': '(x*y)*z != x*(y*z)', 'x': 1, 'y': 1, 'z': 2}
    assert exc.x == 1
    with pytest.raises(AttributeError):
        exc.w


@pytest.mark.parametrize('exc, code', [
    (DocumentError('bad'), 1),
    (NotContinuous('preimage of an open set is not open', open=[0]), 1),
    (LawViolation('monoid.divides-preorder', {'x': 0}), 2),
    (CapExceeded('monoid', 30, 24), 3),
    (SizeOverflow('product', 144, 100), 3),
])
def test_exit_codes(exc, code):
    assert exc.exit_code == code
    assert isinstance(exc, FiltrumError)


def test_cap_message():
    exc = CapExceeded('monoid', 30, 24)
    assert str(exc) == 'monoid of size 30 exceeds cap 24'
    assert exc.to_dict()['cap'] == 24


def test_division_by_zero_is_both():
    exc = DivisionByZero('division by zero')
    assert isinstance(exc, ValidationError) and isinstance(exc, ZeroDivisionError)


def test_law_violation_payload():
    exc = LawViolation('filtrum.opens', {'open': [1]})
    assert exc.to_dict() == {'error': 'LawViolation', 'message': 'law filtrum.opens violated',
                             'law': 'filtrum.opens', 'counterexample': {'open': [1]}}
