import pytest

from filtrum import laws
from filtrum.corpus import corpus_maps, corpus_monoids, t0_spaces
from filtrum.filters import Filter, all_filters
from filtrum.monoid import bits, validate_hom, zn_monoid
from filtrum.ring import zn_ring
from filtrum.space import discrete
from filtrum.topo import point_filter


def check(law_id, value):
    entry = next(entry for entry in laws.REGISTRY if entry.id == law_id)
    assert entry.applies(value)
    return entry.check(value)


@pytest.fixture
def reduction():
    return validate_hom(zn_monoid(6), zn_monoid(3), [0, 1, 2, 0, 1, 2])


def test_smallest_fix_filter():
    assert check('ring.smallest-fix-filter', zn_ring(6)) is None
    assert check('ring.smallest-fix-filter', zn_ring(12)) is None


def test_round_trip(reduction):
    assert check('filtrum.round-trip-monotone', reduction) is None


def test_round_trip_reports_the_first_filter_not_included(reduction, monkeypatch):
    coprime = Filter(reduction.source, bits([1, 2, 4, 5]))
    monkeypatch.setattr(laws, 'pullback', lambda h, G: coprime)
    assert check('filtrum.round-trip-monotone', reduction) == {'source': [1, 3, 5]}


@pytest.mark.parametrize('name', ['Z6', 'Z2xZ3', 'Z2xZ4'])
def test_localization(name):
    M = next(instance.value for instance in corpus_monoids() if instance.name == name)
    assert check('filtrum.localization', M) is None


def test_localization_counts_filters_above():
    M = zn_monoid(6)
    odd = Filter(M, bits([1, 3, 5]))
    assert [G.elements() for G in all_filters(M) if odd <= G] == [[1, 3, 5], [0, 1, 2, 3, 4, 5]]


def test_convergence_on_discrete2():
    X = discrete(2)
    left, right = point_filter(X, 0).filter, point_filter(X, 1).filter
    assert left.members < right.members and not left <= right
    assert check('topo.convergence', X) is None
    assert check('topo.neighborhood-filters-of-subsets', X) is None


def test_convergence_on_t0_spaces():
    for X in t0_spaces():
        assert check('topo.convergence', X) is None
        assert check('topo.neighborhood-filters-of-subsets', X) is None


@pytest.mark.parametrize('instance', corpus_maps(), ids=lambda instance: instance.name)
def test_pushforward(instance):
    assert check('topo.pushforward', instance.value) is None
