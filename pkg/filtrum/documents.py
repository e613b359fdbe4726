'''
Loads, validates and writes the JSON documents every command consumes: monoids,
rings, spaces, monoid homs and continuous maps. Each document is first checked
against its schema under filtrum/spec/ and then against the algebraic laws.
'''

import json
import logging
from functools import lru_cache
from os import path
from typing import Any, Dict, Optional

import attr
import jsonschema

from filtrum.errors import DocumentError, ShapeError
from filtrum.monoid import FiniteMonoid, MonoidHom, members, validate_hom, validate_monoid
from filtrum.ring import FiniteRing, mult_monoid, validate_ring
from filtrum.space import ContinuousMap, FiniteSpace, make_space, validate_map

log = logging.getLogger(__name__)

SCHEMA_DIR = path.join(path.dirname(path.abspath(__file__)), 'spec')
KINDS = ('monoid', 'ring', 'space', 'monoid_hom', 'continuous_map')


@attr.s(frozen=True, auto_attribs=True)
class Document:
    kind: str
    name: str
    value: Any
    expect: Dict[str, int] = attr.ib(factory=dict, eq=False, hash=False)
    file: Optional[str] = attr.ib(default=None, eq=False)

    @property
    def monoid(self):
        if isinstance(self.value, FiniteRing):
            return mult_monoid(self.value)
        if isinstance(self.value, FiniteMonoid):
            return self.value
        raise DocumentError('document {0} is not a monoid or ring'.format(self.name), kind=self.kind)


@lru_cache(maxsize=None)
def load_schema(kind):
    schema_file = path.join(SCHEMA_DIR, kind + '.spec.json')
    try:
        with open(schema_file, 'r') as stream:
            return json.load(stream)
    except IOError:
        raise DocumentError('cannot read schema file {0}'.format(schema_file))


def validate_schema(kind, data):
    try:
        jsonschema.validate(instance=data, schema=load_schema(kind))
    except jsonschema.exceptions.ValidationError as json_ve:
        raise DocumentError(json_ve.message, kind=kind, at=[str(p) for p in json_ve.absolute_path])


def _square(table, size, label):
    if len(table) != size:
        raise ShapeError('{0} has {1} rows, expected {2}'.format(label, len(table), size), size=size)


def parse(data, base_dir='.', name=None, file=None):
    '''Builds a Document from already-decoded JSON data.'''
    if not isinstance(data, dict) or data.get('kind') not in KINDS:
        raise DocumentError('document must be an object with kind in {0}'.format(', '.join(KINDS)))
    kind = data['kind']
    validate_schema(kind, data)
    name = data.get('name') or name or kind
    expect = dict(data.get('expect', {}))

    if kind == 'monoid':
        _square(data['mul'], data['size'], 'mul')
        value = validate_monoid(data['mul'], data['one'], data.get('zero'), name=name)
    elif kind == 'ring':
        _square(data['add'], data['size'], 'add')
        _square(data['mul'], data['size'], 'mul')
        value = validate_ring(data['add'], data['mul'], name=name)
    elif kind == 'space':
        value = make_space(data['points'], data['opens'])
    elif kind == 'monoid_hom':
        source = _resolve(data['source'], base_dir, ('monoid', 'ring'))
        target = _resolve(data['target'], base_dir, ('monoid', 'ring'))
        value = validate_hom(source.monoid, target.monoid, data['map'])
    else:
        source = _resolve(data['source'], base_dir, ('space',))
        target = _resolve(data['target'], base_dir, ('space',))
        value = validate_map(source.value, target.value, data['map'])
    return Document(kind=kind, name=name, value=value, expect=expect, file=file)


def _resolve(ref, base_dir, kinds):
    doc = load_file(path.join(base_dir, ref)) if isinstance(ref, str) else parse(ref, base_dir)
    if doc.kind not in kinds:
        raise DocumentError('expected a {0} document, found {1}'.format(' or '.join(kinds), doc.kind))
    return doc


def load_file(file_path):
    log.debug("processing document %s", file_path)
    try:
        with open(file_path, 'r', encoding='utf-8') as stream:
            data = json.load(stream)
    except IOError as exc:
        raise DocumentError('cannot read {0}: {1}'.format(file_path, exc.strerror), file=file_path)
    except ValueError as exc:
        raise DocumentError('invalid JSON in {0}: {1}'.format(file_path, exc), file=file_path)
    stem = path.splitext(path.basename(file_path))[0]
    return parse(data, base_dir=path.dirname(file_path) or '.', name=stem, file=file_path)


def dump(value, name=None):
    '''The JSON document for a structure; inverse of parse up to naming.'''
    if isinstance(value, FiniteRing):
        data = {'kind': 'ring', 'size': value.size, 'add': [list(r) for r in value.add],
                'mul': [list(r) for r in value.mul]}
    elif isinstance(value, FiniteMonoid):
        data = {'kind': 'monoid', 'size': value.size, 'mul': [list(r) for r in value.mul],
                'one': value.one, 'zero': value.zero}
    elif isinstance(value, FiniteSpace):
        data = {'kind': 'space', 'points': list(value.points),
                'opens': [members(U) for U in value.opens]}
    elif isinstance(value, MonoidHom):
        data = {'kind': 'monoid_hom', 'source': dump(value.source), 'target': dump(value.target),
                'map': list(value.map)}
    elif isinstance(value, ContinuousMap):
        data = {'kind': 'continuous_map', 'source': dump(value.source), 'target': dump(value.target),
                'map': list(value.map)}
    else:
        raise TypeError('cannot dump {0}'.format(type(value).__name__))
    name = name or getattr(value, 'name', '')
    if name:
        data['name'] = name
    return data


def plain(value):
    '''JSON fallback for the sets and value objects that end up in counterexamples.'''
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    if attr.has(type(value)):
        return attr.asdict(value)
    return str(value)


def dumps(data):
    '''Deterministic JSON text.'''
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False, default=plain) + '\n'
