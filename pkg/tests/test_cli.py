import io
import json

import pytest

from filtrum import documents
from filtrum.cli import main


def run(*argv):
    stdout, stderr = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=stdout, stderr=stderr)
    return code, stdout.getvalue(), stderr.getvalue()


def test_filters(corpus_path):
    code, out, _ = run('filters', corpus_path('monoids', 'z6.json'))
    assert code == 0
    report = json.loads(out)
    assert report['monoid'] == 'Z6'
    assert len(report['filters']) == 4
    assert [f['ultrafilter'] for f in report['filters']] == [False, True, True, False]


def test_filters_without_zero(corpus_path):
    code, out, _ = run('filters', corpus_path('monoids', 'trivial.json'))
    assert code == 0
    assert not any(f['ultrafilter'] for f in json.loads(out)['filters'])


def test_filtrum(corpus_path):
    code, out, _ = run('filtrum', corpus_path('monoids', 'z6.json'))
    assert code == 0 and json.loads(out)['opens'] == 6
    code, out, _ = run('filtrum', corpus_path('rings', 'b2.json'), '--format', 'dot')
    assert code == 0 and out.startswith('digraph')


def test_fixfilters(fixture_path):
    code, out, _ = run('fixfilters', fixture_path('localization.json'))
    assert code == 0
    report = json.loads(out)
    assert report['source'] == [[1, 2, 4, 5], [0, 1, 2, 3, 4, 5]]
    assert report['target'] == [[1, 2], [0, 1, 2]]
    assert report['holds'] is True


def test_characterize(corpus_path):
    code, out, _ = run('characterize', corpus_path('spaces', 'sierpinski.json'))
    report = json.loads(out)
    assert code == 0
    assert report['verdict'] == 'success'
    assert report['local_opens'] == ['{a}', '{a,b}']
    assert report['psi'] == {'a': 1, 'b': 0}
    code, out, _ = run('characterize', corpus_path('spaces', 'discrete2.json'))
    report = json.loads(out)
    assert (code, report['verdict'], report['condition']) == (0, 'failure', 2)


def test_sobrify_emits_a_loadable_space(corpus_path):
    code, out, _ = run('sobrify', corpus_path('spaces', 'indiscrete2.json'))
    assert code == 0
    doc = documents.parse(json.loads(out))
    assert doc.name == 'indiscrete2-sober'
    assert doc.value.points == ('{x0,x1}',)
    code, out, _ = run('sobrify', corpus_path('spaces', 'indiscrete2.json'), '--format', 'dot')
    assert 's1 -> t0' in out


def test_order(corpus_path):
    code, out, _ = run('order', corpus_path('spaces', 'sierpinski.json'))
    assert code == 0 and 'n1 -> n0;' in out


@pytest.mark.parametrize('name, error', [
    ('nonassociative.json', 'NonAssociative'),
    ('noncommutative.json', 'NonCommutative'),
    ('ragged.json', 'ShapeError'),
])
def test_invalid_documents_exit_1(fixture_path, name, error):
    code, out, err = run('filters', fixture_path(name))
    assert code == 1 and out == ''
    assert json.loads(err.strip().splitlines()[-1])['error'] == error


def test_nonassociative_witness(fixture_path):
    _, _, err = run('filtrum', fixture_path('nonassociative.json'))
    diagnostic = json.loads(err.strip().splitlines()[-1])
    assert (diagnostic['x'], diagnostic['y'], diagnostic['z']) == (1, 1, 2)


def test_wrong_document_kind(corpus_path):
    code, _, err = run('filters', corpus_path('spaces', 'sierpinski.json'))
    assert code == 1 and 'DocumentError' in err


def test_cap_exit_3(corpus_path, tmp_path):
    config_file = tmp_path / 'small.yml'
    config_file.write_text('max_enum_size: 4\n')
    code, _, err = run('--config', str(config_file), 'filters', corpus_path('monoids', 'z6.json'))
    assert code == 3
    assert json.loads(err.strip().splitlines()[-1])['error'] == 'CapExceeded'


def test_suite_on_a_document(corpus_path):
    code, out, _ = run('suite', corpus_path('spaces', 'sierpinski.json'), '--laws', 'ch3')
    report = json.loads(out)
    assert code == 0
    assert report['passed'] and report['failed'] == 0
    assert report['suite'] == 'sierpinski:ch3'


def test_suite_reports_a_corrupted_fixture(fixture_path):
    code, out, _ = run('suite', fixture_path('corrupted_z6.json'), '--laws', 'ch1')
    report = json.loads(out)
    assert code == 2
    failed = [r for r in report['records'] if not r['passed']]
    assert [r['law'] for r in failed] == ['fixture.expectations']
    assert failed[0]['counterexample'] == {'filters': {'expected': 5, 'observed': 4}}


@pytest.mark.parametrize('command', ['filtrum', 'suite'])
def test_output_does_not_depend_on_workers(corpus_path, command):
    target = corpus_path('monoids', 'z6.json')
    outputs = [run('--workers', str(workers), command, target) for workers in (1, 4, 8, 1, 4, 8)]
    assert {code for code, _, _ in outputs} == {0}
    assert len({out for _, out, _ in outputs}) == 1


def test_output_file(corpus_path, tmp_path):
    target = tmp_path / 'order.dot'
    code, out, _ = run('-o', str(target), 'order', corpus_path('spaces', 'chain3.json'))
    assert code == 0 and out == ''
    assert target.read_text().startswith('digraph "chain3"')
