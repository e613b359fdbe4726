'''
Topological filters: filters of the monoid (Top(X), ∩), their convergence and
irreducibility, the maps a continuous map induces on them, the embedding of a
space into its filtrum, filterhaft maps and sobrification.

In Top(X) divisibility is the superset relation, so every topological filter is
upward closed and, X being finite, principal. Enumerations here are bounded by
the open-family cap rather than the monoid enumeration cap.
'''

import logging
from functools import lru_cache
from typing import Tuple

import attr
from more_itertools import powerset

from filtrum import config
from filtrum.certificate import Certificate, check_bijection
from filtrum.errors import CapExceeded, NotClosedUnderOps, TypeMismatch
from filtrum.filt import Filtrum, build_filtrum, filtrum_space, pullback, pushforward
from filtrum.filters import Filter, all_filters, ultrafilters
from filtrum.monoid import FiniteMonoid, MonoidHom, bits, is_subset, members
from filtrum.space import ContinuousMap, FiniteSpace, find_homeomorphism, subspace

log = logging.getLogger(__name__)


@lru_cache(maxsize=256)
def top_monoid(X):
    '''One element per open (in the order of X.opens); product = intersection, one = X, zero = ∅.'''
    index = X.open_index
    table = []
    for U in X.opens:
        row = []
        for V in X.opens:
            if U & V not in index:
                raise NotClosedUnderOps('open family not closed under intersection',
                                        left=members(U), right=members(V))
            row.append(index[U & V])
        table.append(tuple(row))
    return FiniteMonoid(size=len(X.opens), mul=tuple(table), one=index[X.full], zero=index[0],
                        name='Top({0})'.format(','.join(X.points)))


def _cap(X, cap):
    cap = config.current().max_opens if cap is None else cap
    if len(X.opens) > cap:
        raise CapExceeded('open family', len(X.opens), cap)
    return len(X.opens)


@attr.s(frozen=True, auto_attribs=True)
class TopFilter:
    space: FiniteSpace = attr.ib(eq=False, repr=False)
    filter: Filter

    @property
    def opens(self):
        return [self.space.opens[i] for i in self.filter.elements()]

    def __contains__(self, U):
        return self.space.open_index[U] in self.filter

    def label(self):
        return '[' + ' '.join(self.space.label(U) for U in self.opens) + ']'


def top_filter(X, opens):
    '''TopFilter from a collection of open bitsets.'''
    M = top_monoid(X)
    mask = bits(X.open_index[U] for U in opens)
    M.require_filter(mask)
    return TopFilter(X, Filter(M, mask))


def all_top_filters(X, cap=None):
    size = _cap(X, cap)
    return [TopFilter(X, F) for F in all_filters(top_monoid(X), cap=size)]


def neighborhood_filter(X, T):
    '''U(T): the opens containing T.'''
    M = top_monoid(X)
    return TopFilter(X, Filter(M, bits(i for i, U in enumerate(X.opens) if is_subset(T, U))))


def point_filter(X, x):
    return neighborhood_filter(X, 1 << x)


def _outside_union(F):
    union = 0
    for i, U in enumerate(F.space.opens):
        if i not in F.filter:
            union |= U
    return union


def is_quasicompact_filter(F):
    '''U ∪ V ∈ F implies U ∈ F or V ∈ F.'''
    X = F.space
    for U in X.opens:
        for V in X.opens:
            if (U | V) in F and U not in F and V not in F:
                return False
    return True


def is_irreducible_filter(F):
    '''
    Any union in F has a member in F. Equivalently the union of all opens outside F
    is outside F; with the empty union this forces ∅ ∉ F.
    '''
    return _outside_union(F) not in F


def is_irreducible_filter_exhaustive(F, cap=None):
    '''The subfamily definition, checked over every family of opens.'''
    X = F.space
    cap = config.current().max_subfamily_scan if cap is None else cap
    if len(X.opens) > cap:
        raise CapExceeded('subfamily scan', len(X.opens), cap)
    for family in powerset(X.opens):
        union = 0
        for U in family:
            union |= U
        if union in F and not any(U in F for U in family):
            return False
    return True


def convergence_points(F):
    '''X minus the union of the opens outside F; the points x with U(x) ⊆ F.'''
    return F.space.full & ~_outside_union(F)


def is_consistent_top(F):
    '''The empty open is not in F.'''
    return 0 not in F


def irreducible_closed_sets(X):
    closed = X.closed_sets
    out = []
    for A in closed:
        if not A:
            continue
        proper = [B for B in closed if is_subset(B, A) and B != A]
        if not any(B | C == A for B in proper for C in proper):
            out.append(A)
    return out


def irreducible_filters(X, cap=None):
    return [F for F in all_top_filters(X, cap=cap) if is_irreducible_filter(F)]


def filter_of_closed_set(X, A):
    '''{U : U ∩ A ≠ ∅}.'''
    return TopFilter(X, Filter(top_monoid(X), bits(i for i, U in enumerate(X.opens) if U & A)))


def irreducible_filter_closed_set_bijection(X, cap=None):
    closed = irreducible_closed_sets(X)
    filters = irreducible_filters(X, cap=cap)
    pairs = [(A, filter_of_closed_set(X, A).filter.members) for A in closed]
    M = top_monoid(X)
    return check_bijection('topo.irreducible-filter-closed-set-bijection', pairs, closed,
                           [F.filter.members for F in filters],
                           inverse=lambda m: convergence_points(TopFilter(X, Filter(M, m))))


@lru_cache(maxsize=256)
def top_hom(phi):
    '''Top(Y) → Top(X), V ↦ φ⁻¹(V).'''
    X, Y = phi.source, phi.target
    return MonoidHom(source=top_monoid(Y), target=top_monoid(X),
                     map=tuple(X.open_index[phi.preimage(V)] for V in Y.opens))


def _require(space, F):
    if F.space != space:
        raise TypeMismatch('filter lives on another space')


def pushforward_filter(phi, F):
    '''φ(F) = {V : φ⁻¹(V) ∈ F}.'''
    _require(phi.source, F)
    return TopFilter(phi.target, pullback(top_hom(phi), F.filter))


def pullback_filter(phi, G):
    '''φ⁻¹(G), generated by the preimages of members of G.'''
    _require(phi.target, G)
    return TopFilter(phi.source, pushforward(top_hom(phi), G.filter))


def is_target_fix(phi, F):
    return pullback_filter(phi, pushforward_filter(phi, F)) == F


def all_filters_fix(phi, cap=None):
    '''Every topological filter on the source is fix.'''
    return all(is_target_fix(phi, F) for F in all_top_filters(phi.source, cap=cap))


def neighborhood_filters_fix(phi):
    return all(is_target_fix(phi, point_filter(phi.source, x)) for x in range(phi.source.size))


def initial_topology(phi):
    '''The source carries the coarsest topology making φ continuous.'''
    preimages = {phi.preimage(V) for V in phi.target.opens}
    return preimages == set(phi.source.opens)


@attr.s(frozen=True, auto_attribs=True)
class ClosedMapVerdict:
    closed: bool
    criterion: bool


def closed_map_criterion(phi):
    '''φ closed, against: φ⁻¹(U(y)) = U(φ⁻¹(y)) for every y.'''
    criterion = all(
        pullback_filter(phi, point_filter(phi.target, y))
        == neighborhood_filter(phi.source, phi.preimage(1 << y))
        for y in range(phi.target.size))
    return ClosedMapVerdict(closed=phi.is_closed_map, criterion=criterion)


def is_filterhaft(phi):
    '''
    For every y and open W ∋ y there is an open V with y ∈ V ⊆ W such that every
    open V' with φ⁻¹(V') ⊆ φ⁻¹(V) lies in W.
    '''
    Y = phi.target
    for y in range(Y.size):
        for W in Y.opens:
            if not W >> y & 1:
                continue
            if not any(
                    V >> y & 1 and is_subset(V, W)
                    and all(is_subset(V2, W) for V2 in Y.opens
                            if is_subset(phi.preimage(V2), phi.preimage(V)))
                    for V in Y.opens):
                return False
    return True


def filtrum_extension(phi):
    '''ψ(y) = φ⁻¹(U(y)), one topological filter on the source per target point.'''
    return tuple(pullback_filter(phi, point_filter(phi.target, y)) for y in range(phi.target.size))


def _down_closure(Phi, mask):
    return sum(1 << i for i in range(len(Phi)) if Phi.up[i] & mask)


@attr.s(frozen=True, auto_attribs=True)
class Embedding:
    filtrum: Filtrum
    map: Tuple[int, ...]
    continuous: bool
    initial: bool
    injective: bool
    dense: bool


def _point_map_properties(Phi, Y, mapping):
    '''Continuity and initiality of a point map Y → Filt, read off the basis sets.'''
    preimages = set()
    for D in set(Phi.basis):
        preimages.add(bits(y for y, p in enumerate(mapping) if D >> p & 1))
    unions = {0}
    for P in sorted(preimages):
        unions |= {O | P for O in unions}
    continuous = all(Y.is_open(P) for P in preimages)
    return continuous, unions == set(Y.opens)


def embed(X, cap=None):
    '''x ↦ U(x) into the filtrum of Top(X).'''
    size = _cap(X, cap)
    Phi = build_filtrum(top_monoid(X), enum_cap=size)
    mapping = tuple(Phi.point(point_filter(X, x).filter) for x in range(X.size))
    continuous, initial = _point_map_properties(Phi, X, mapping)
    image = bits(mapping)
    dense = is_subset(Phi.consistent_points, _down_closure(Phi, image))
    return Embedding(filtrum=Phi, map=mapping, continuous=continuous, initial=initial,
                     injective=len(set(mapping)) == len(mapping), dense=dense)


def embedding_into_consistent(X, cap=None):
    '''embed(X) as a continuous map onto the consistent subspace of the filtrum.'''
    e = embed(X, cap=cap)
    target, index = subspace(filtrum_space(e.filtrum), e.filtrum.consistent_points)
    position = {p: i for i, p in enumerate(index)}
    return ContinuousMap(source=X, target=target, map=tuple(position[p] for p in e.map))


def filtrum_extension_is_embedding(phi, cap=None):
    '''ψ: Y → Filt Top(X) is injective and Y carries the initial topology.'''
    size = _cap(phi.source, cap)
    Phi = build_filtrum(top_monoid(phi.source), enum_cap=size)
    mapping = tuple(Phi.point(F.filter) for F in filtrum_extension(phi))
    continuous, initial = _point_map_properties(Phi, phi.target, mapping)
    return continuous and initial and len(set(mapping)) == len(mapping)


@attr.s(frozen=True, auto_attribs=True)
class Sobrification:
    space: FiniteSpace
    map: Tuple[int, ...]
    lattice: Certificate


def sobrify(X, cap=None):
    '''
    Points are the irreducible filters, named by their convergence sets; the opens
    are D(U) = {F : U ∈ F}. U ↦ D(U) is certified as a lattice isomorphism.
    '''
    filters = sorted(irreducible_filters(X, cap=cap), key=lambda F: F.filter.members)
    names = tuple(X.label(convergence_points(F)) for F in filters)
    D = [bits(k for k, F in enumerate(filters) if U in F) for U in X.opens]
    space = FiniteSpace(points=names, opens=tuple(sorted(set(D))))
    index = {F.filter.members: k for k, F in enumerate(filters)}
    mapping = tuple(index[point_filter(X, x).filter.members] for x in range(X.size))

    pairs = tuple(zip(X.opens, D))
    lattice = check_bijection('topo.sobrification-lattice', pairs, list(X.opens), list(space.opens))
    if lattice.holds:
        image = dict(pairs)
        for U in X.opens:
            for V in X.opens:
                if image[U & V] != image[U] & image[V] or image[U | V] != image[U] | image[V]:
                    lattice = Certificate(lattice.claim, False, pairs,
                                          {'reason': 'lattice operations', 'at': [members(U), members(V)]})
                    break
    log.debug("sobrification of %d points has %d points", X.size, space.size)
    return Sobrification(space=space, map=mapping, lattice=lattice)


def is_sober(X, cap=None):
    '''Every irreducible filter is U(x) for exactly one x.'''
    neighborhoods = [point_filter(X, x).filter.members for x in range(X.size)]
    for F in irreducible_filters(X, cap=cap):
        if neighborhoods.count(F.filter.members) != 1:
            return False
    return True


def sobrify_idempotent(X, cap=None):
    once = sobrify(X, cap=cap).space
    twice = sobrify(once, cap=cap).space
    return find_homeomorphism(once, twice) is not None


def top_ultrafilters(X, cap=None):
    size = _cap(X, cap)
    return [TopFilter(X, F) for F in ultrafilters(top_monoid(X), cap=size)]


def top_ultrafilter_criterion(F):
    '''F is consistent and every open outside F is disjoint from some member of F.'''
    X = F.space
    return is_consistent_top(F) and all(any(not U & V for U in F.opens) for V in X.opens if V not in F)


def dense_opens(X):
    return [U for U in X.opens if is_subset(X.full, _closure_of_open(X, U))]


def _closure_of_open(X, U):
    out = X.full
    for C in X.closed_sets:
        if is_subset(U, C):
            out &= C
    return out

