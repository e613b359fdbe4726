from filtrum import render
from filtrum.filt import build_filtrum
from filtrum.filters import all_filters, ultrafilters
from filtrum.monoid import zn_monoid
from filtrum.space import indiscrete, sierpinski
from filtrum.topo import sobrify


def test_filtrum_dot():
    Phi = build_filtrum(zn_monoid(6))
    text = render.filtrum_dot(Phi, name='Z6')
    assert text.startswith('digraph "Z6" {')
    assert text.count('doublecircle') == 1
    assert 'n0 [label="{1,5}", shape=doublecircle];' in text
    assert text.count('->') == 4
    assert text == render.filtrum_dot(build_filtrum(zn_monoid(6)), name='Z6')


def test_specialization_dot():
    text = render.specialization_dot(sierpinski(), name='S')
    assert 'n1 [label="b", shape=doublecircle];' in text
    assert 'n0 [label="a"];' in text
    assert 'n1 -> n0;' in text
    text = render.specialization_dot(indiscrete(2))
    assert 'label="x0,x1"' in text
    assert '->' not in text


def test_sobrification_dot():
    X = indiscrete(2)
    text = render.sobrification_dot(X, sobrify(X), name='I2')
    assert 's0 -> t0 [style=dashed];' in text
    assert 's1 -> t0 [style=dashed];' in text


def test_filtrum_json():
    report = render.filtrum_json(build_filtrum(zn_monoid(6)))
    assert report['opens'] == 6
    assert [p['members'] for p in report['points']] == [[1, 5], [1, 3, 5], [1, 2, 4, 5], [0, 1, 2, 3, 4, 5]]
    assert [p['consistent'] for p in report['points']] == [True, True, True, False]
    assert report['basis']['0'] == [3]
    assert render.filtrum_json(build_filtrum(zn_monoid(6)), cap=2)['opens'] is None


def test_filters_json():
    M = zn_monoid(6)
    report = render.filters_json(all_filters(M), ultrafilters(M).masks)
    assert [f['ultrafilter'] for f in report['filters']] == [False, True, True, False]
    assert report['filters'][2]['bits'] == 0b110110


def test_dot_escape():
    assert render.dot_escape('a"b\\c') == 'a\\"b\\\\c'
