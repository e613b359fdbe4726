import hypothesis
import pytest

from filtrum.characterize import characterize_filtrum_space, local_opens
from filtrum.filt import build_filtrum, filtrum_space
from filtrum.monoid import zn_monoid
from filtrum.space import chain, discrete, find_homeomorphism, indiscrete, sierpinski
from tests.strategies import small_monoids


def test_sierpinski_is_a_filtrum():
    X = sierpinski()
    assert local_opens(X) == (0b01, 0b11)
    result = characterize_filtrum_space(X)
    assert result
    assert result.monoid.size == 2
    assert result.certificate
    assert len(build_filtrum(result.monoid)) == 2


def test_discrete_space_has_no_poorest_point():
    result = characterize_filtrum_space(discrete(2))
    assert not result
    assert result.condition == 2
    assert result.witness == {'local_opens': [[0], [1]]}


def test_indiscrete_space_is_not_t0():
    result = characterize_filtrum_space(indiscrete(2))
    assert result.condition == 1
    assert result.witness == {'points': ['x0', 'x1']}


def test_chain_is_a_filtrum():
    assert characterize_filtrum_space(chain(3))


@pytest.mark.parametrize('n', [1, 4, 6, 12])
def test_round_trip(n):
    X = filtrum_space(build_filtrum(zn_monoid(n)))
    result = characterize_filtrum_space(X)
    assert result and result.certificate
    assert find_homeomorphism(filtrum_space(build_filtrum(result.monoid)), X) is not None


@hypothesis.given(small_monoids)
def test_every_filtrum_is_recognized(M):
    result = characterize_filtrum_space(filtrum_space(build_filtrum(M)))
    assert result and result.certificate
