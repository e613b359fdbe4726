'''
The validation corpus: named monoids, rings, homs, spaces and maps the law suite
quantifies over, plus the JSON fixture documents under corpus/.
'''

import glob
import itertools
import logging
from functools import lru_cache
from os import path
from typing import Any, Dict, Tuple

import attr

from filtrum import documents
from filtrum.filters import all_filters
from filtrum.monoid import (FiniteMonoid, MonoidHom, compose, cyclic_group, fraction_monoid,
                            free_truncated_monoid, identity_hom, principal_quotient, product_monoid,
                            semilattice_chain, trivial_monoid, zn_monoid)
from filtrum.ring import boolean_ring, mult_monoid, product_ring, zn_ring
from filtrum.space import (ContinuousMap, FiniteSpace, chain, discrete, find_homeomorphism,
                           inclusion, indiscrete, one_point, quotient_map, sierpinski)
from filtrum.topo import embedding_into_consistent

log = logging.getLogger(__name__)

CORPUS_DIR = path.join(path.dirname(path.dirname(path.abspath(__file__))), 'corpus')


@attr.s(frozen=True, auto_attribs=True)
class Instance:
    name: str
    value: Any
    expect: Dict[str, int] = attr.ib(factory=dict, eq=False, hash=False)


@attr.s(frozen=True, auto_attribs=True)
class Corpus:
    monoids: Tuple[Instance, ...] = ()
    rings: Tuple[Instance, ...] = ()
    homs: Tuple[Instance, ...] = ()
    pairs: Tuple[Instance, ...] = ()
    spaces: Tuple[Instance, ...] = ()
    maps: Tuple[Instance, ...] = ()
    documents: Tuple[Instance, ...] = ()
    include_global: bool = False

    def of_kind(self, kind):
        if kind == 'global':
            return [Instance('global', None)] if self.include_global else []
        return list(getattr(self, kind))


def corpus_rings():
    rings = [zn_ring(n) for n in range(2, 13)]
    rings += [boolean_ring(2), boolean_ring(3)]
    rings += [product_ring(zn_ring(2), zn_ring(4)), product_ring(zn_ring(2), zn_ring(6)),
              product_ring(zn_ring(3), zn_ring(4))]
    named = []
    for R in rings:
        name = R.name if R.name not in ('Z2xZ2', 'Z2xZ2xZ2') else 'B{0}'.format(R.size.bit_length() - 1)
        named.append(Instance(name, R))
    return named


def corpus_monoids():
    monoids = [trivial_monoid()]
    monoids += [zn_monoid(n) for n in range(2, 13)]
    monoids += [mult_monoid(boolean_ring(2)), mult_monoid(boolean_ring(3))]
    monoids += [semilattice_chain(k) for k in range(2, 5)]
    monoids += [cyclic_group(n) for n in (2, 3, 4)]
    monoids += [free_truncated_monoid(1, 2)[0], free_truncated_monoid(2, 1)[0]]
    monoids += [product_monoid(zn_monoid(2), zn_monoid(3))[0], product_monoid(zn_monoid(2), zn_monoid(4))[0]]
    return [Instance(M.name or 'M{0}'.format(i), M) for i, M in enumerate(monoids)]


def corpus_pairs():
    small = [trivial_monoid(), zn_monoid(2), zn_monoid(3), zn_monoid(4), zn_monoid(6), semilattice_chain(3)]
    pairs = []
    for M1, M2 in itertools.combinations_with_replacement(small, 2):
        if M1.size * M2.size <= 24:
            pairs.append(Instance('{0}*{1}'.format(M1.name, M2.name), (M1, M2)))
    return pairs


def reduction_hom(n, d):
    '''(Z/n, ·) → (Z/d, ·), x ↦ x mod d, for d | n.'''
    return MonoidHom(source=zn_monoid(n), target=zn_monoid(d), map=tuple(x % d for x in range(n)))


def to_trivial(M):
    return MonoidHom(source=M, target=trivial_monoid(), map=(0,) * M.size)


def units_inclusion(M):
    '''The unit group as a monoid, with its inclusion into M.'''
    ids = [x for x in range(M.size) if M.units >> x & 1]
    position = {x: i for i, x in enumerate(ids)}
    table = tuple(tuple(position[M.mul[x][y]] for y in ids) for x in ids)
    G = FiniteMonoid(size=len(ids), mul=table, one=position[M.one], zero=None,
                     name='units({0})'.format(M.name))
    return MonoidHom(source=G, target=M, map=tuple(ids))


def corpus_homs():
    homs = []
    for M in (trivial_monoid(), zn_monoid(4), zn_monoid(6), mult_monoid(boolean_ring(2)), semilattice_chain(3)):
        homs.append(Instance('id({0})'.format(M.name), identity_hom(M)))
        homs.append(Instance('{0}->1'.format(M.name), to_trivial(M)))
    for n, d in ((6, 3), (6, 2), (4, 2), (12, 4), (12, 6), (8, 4)):
        homs.append(Instance('Z{0}->Z{1}'.format(n, d), reduction_hom(n, d)))
    for M in (zn_monoid(6), zn_monoid(12)):
        homs.append(Instance('units->{0}'.format(M.name), units_inclusion(M)))
        homs.append(Instance('{0}->{0}/~'.format(M.name), principal_quotient(M)[1]))
        for F in all_filters(M):
            _, h = fraction_monoid(M, F)
            homs.append(Instance('{0}->{0}_{1}'.format(M.name, F.label()), h))
    for M1, M2 in ((zn_monoid(2), zn_monoid(3)), (zn_monoid(4), semilattice_chain(2))):
        _, p1, p2 = product_monoid(M1, M2)
        homs.append(Instance('pr1({0}x{1})'.format(M1.name, M2.name), p1))
        homs.append(Instance('pr2({0}x{1})'.format(M1.name, M2.name), p2))
    homs.append(Instance('Z12->Z6->Z3', compose(reduction_hom(6, 3), reduction_hom(12, 6))))
    return homs


def _up_set_space(n, relation):
    '''Opens are the up-sets of the order given by relation (pairs x ≤ y).'''
    opens = []
    for U in range(1 << n):
        if all(U >> y & 1 for x, y in relation if U >> x & 1):
            opens.append(U)
    return FiniteSpace(points=tuple('p{0}'.format(i) for i in range(n)), opens=tuple(opens))


@lru_cache(maxsize=None)
def t0_spaces(max_points=4):
    '''All T0 spaces with 1..max_points points, one per homeomorphism class.'''
    out = []
    for n in range(1, max_points + 1):
        kept = []
        candidates = [(x, y) for x in range(n) for y in range(n) if x != y]
        for k in range(len(candidates) + 1):
            for relation in itertools.combinations(candidates, k):
                rel = set(relation)
                if any((y, x) in rel for x, y in rel):
                    continue
                if any((x, z) not in rel and x != z for x, y in rel for y2, z in rel if y == y2):
                    continue
                X = _up_set_space(n, rel)
                if not any(find_homeomorphism(X, Y) is not None for Y in kept):
                    kept.append(X)
        out.extend(kept)
    log.debug("%d T0 spaces up to %d points", len(out), max_points)
    return tuple(out)


def corpus_spaces():
    spaces = [Instance('T0-{0}-{1}'.format(X.size, i), X) for i, X in enumerate(t0_spaces())]
    spaces += [Instance('sierpinski', sierpinski())]
    spaces += [Instance('indiscrete{0}'.format(n), indiscrete(n)) for n in range(2, 6)]
    spaces += [Instance('discrete5', discrete(5)), Instance('chain5', chain(5))]
    return spaces


def corpus_maps():
    S = sierpinski()
    maps = []
    for name, X in (('sierpinski', S), ('discrete2', discrete(2)), ('chain3', chain(3)),
                    ('indiscrete2', indiscrete(2))):
        maps.append(Instance('id({0})'.format(name), ContinuousMap(X, X, tuple(range(X.size)))))
        maps.append(Instance('{0}->pt'.format(name), ContinuousMap(X, one_point(), (0,) * X.size)))
    maps.append(Instance('open-point-inclusion', inclusion(S, 0b01)))
    maps.append(Instance('closed-point-inclusion', inclusion(S, 0b10)))
    maps.append(Instance('discrete2->indiscrete2', ContinuousMap(discrete(2), indiscrete(2), (0, 1))))
    maps.append(Instance('discrete2->sierpinski', ContinuousMap(discrete(2), S, (0, 1))))
    maps.append(Instance('collapse-discrete2', quotient_map(discrete(2), [[0, 1]])))
    maps.append(Instance('collapse-chain3', quotient_map(chain(3), [[0], [1, 2]])))
    maps.append(Instance('chain3-subspace', inclusion(chain(3), 0b011)))
    for name, X in (('sierpinski', S), ('discrete2', discrete(2)), ('chain3', chain(3))):
        maps.append(Instance('embed({0})'.format(name), embedding_into_consistent(X)))
    return maps


def builtin():
    return Corpus(monoids=tuple(corpus_monoids()), rings=tuple(corpus_rings()),
                  homs=tuple(corpus_homs()), pairs=tuple(corpus_pairs()),
                  spaces=tuple(corpus_spaces()), maps=tuple(corpus_maps()),
                  documents=tuple(load_directory()), include_global=True)


def load_directory(root=None):
    '''Every fixture document under root, sorted by path.'''
    root = CORPUS_DIR if root is None else root
    out = []
    for file_path in sorted(glob.glob(path.join(root, '*', '*.json'))):
        doc = documents.load_file(file_path)
        out.append(Instance(path.relpath(file_path, root), doc, doc.expect))
    return out


def from_document(doc):
    '''A single-document corpus.'''
    item = Instance(doc.name, doc.value, doc.expect)
    fields = {'documents': (Instance(doc.name, doc, doc.expect),)}
    if doc.kind == 'monoid':
        fields['monoids'] = (item,)
        if doc.value.size ** 2 <= 24:
            fields['pairs'] = (Instance('{0}*{0}'.format(doc.name), (doc.value, doc.value)),)
    elif doc.kind == 'ring':
        fields['rings'] = (item,)
        fields['monoids'] = (Instance(doc.name, mult_monoid(doc.value)),)
    elif doc.kind == 'monoid_hom':
        fields['homs'] = (item,)
    elif doc.kind == 'space':
        fields['spaces'] = (item,)
    else:
        fields['maps'] = (item,)
    return Corpus(**fields)


def composable_pairs(homs):
    out = []
    for a, b in itertools.product(homs, repeat=2):
        if a.value.target == b.value.source:
            out.append((a, b))
    return out

