'''
The filtrum Filt M: all filters of a finite monoid, topologized by the basis sets
D(f) = {F : f ∈ F}, and the functors a monoid hom induces on it.
'''

import logging
from functools import cached_property
from typing import Tuple

import attr

from filtrum import config
from filtrum.certificate import Certificate, check_bijection
from filtrum.errors import CapExceeded, CarrierMismatch, NotAFilter
from filtrum.filters import Filter, FilterFamily, all_filters, is_consistent
from filtrum.monoid import FiniteMonoid, bit, is_subset, members, product_monoid
from filtrum.space import FiniteSpace, check_homeomorphism, product_space, subspace

log = logging.getLogger(__name__)


@attr.s(frozen=True, auto_attribs=True)
class Filtrum:
    monoid: FiniteMonoid
    points: FilterFamily

    def __len__(self):
        return len(self.points)

    @cached_property
    def index(self):
        return {F.members: i for i, F in enumerate(self.points)}

    @cached_property
    def full(self):
        return (1 << len(self.points)) - 1

    @cached_property
    def up(self):
        '''up[i]: points j with F_i ⊆ F_j.'''
        masks = self.points.masks
        return tuple(sum(1 << j for j, G in enumerate(masks) if is_subset(F, G)) for F in masks)

    @cached_property
    def basis(self):
        masks = self.points.masks
        return tuple(sum(1 << i for i, F in enumerate(masks) if F >> f & 1)
                     for f in range(self.monoid.size))

    @cached_property
    def principal_point(self):
        return tuple(self.index[self.monoid.saturate(bit(f))] for f in range(self.monoid.size))

    @cached_property
    def labels(self):
        return tuple(F.label() for F in self.points)

    def point(self, F):
        mask = getattr(F, 'members', F)
        try:
            return self.index[mask]
        except KeyError:
            raise NotAFilter('not a point of this filtrum', members=members(mask))

    @cached_property
    def closed_points(self):
        return sum(1 << i for i in range(len(self.points)) if self._is_closed({i}))

    def _is_closed(self, ids):
        # closed sets are the down-sets of the inclusion order
        mask = sum(1 << i for i in ids)
        return all(not (self.up[j] & mask) or j in ids for j in range(len(self.points)))

    @cached_property
    def consistent_points(self):
        return sum(1 << i for i, F in enumerate(self.points) if is_consistent(F))

    @cached_property
    def ultrafilter_points(self):
        consistent = self.consistent_points
        return sum(1 << i for i in members(consistent) if self.up[i] & consistent == 1 << i)


def build_filtrum(M, cap=None, enum_cap=None):
    family = all_filters(M, cap=enum_cap)
    cap = config.current().max_points if cap is None else cap
    if len(family) > cap:
        raise CapExceeded('filtrum points', len(family), cap)
    return Filtrum(monoid=M, points=family)


def basis_set(Phi, f):
    Phi.monoid.check_index(f)
    return Phi.basis[f]


def basis_union(Phi, N):
    '''D(N): the points meeting the element set N.'''
    out = 0
    for f in members(getattr(N, 'members', N)):
        out |= basis_set(Phi, f)
    return out


def is_open(Phi, U):
    '''U is upward closed and every F in U has some f ∈ F with F(f) ∈ U.'''
    ids = members(U)
    for i in ids:
        if Phi.up[i] & ~U:
            return False
    for i in ids:
        if not any(U >> Phi.principal_point[f] & 1 for f in Phi.points[i].elements()):
            return False
    return True


def open_sets(Phi, cap=None):
    cap = config.current().max_opens if cap is None else cap
    opens = {0}
    for D in sorted(set(Phi.basis)):
        opens |= {O | D for O in opens}
        if len(opens) > cap:
            raise CapExceeded('filtrum open family', len(opens), cap)
    return tuple(sorted(opens))


def filtrum_space(Phi, cap=None):
    limit = config.current().max_points
    if len(Phi) > limit:
        raise CapExceeded('filtrum points', len(Phi), limit)
    return FiniteSpace(points=Phi.labels, opens=open_sets(Phi, cap=cap))


def consistent_subspace(Phi, X=None):
    X = filtrum_space(Phi) if X is None else X
    return subspace(X, Phi.consistent_points)


def ultrafilter_subspace(Phi, X=None):
    X = filtrum_space(Phi) if X is None else X
    return subspace(X, Phi.ultrafilter_points)


def _require(M, F):
    if F.carrier != M:
        raise CarrierMismatch('filter belongs to another monoid')


def pullback(h, G):
    '''h⁻¹(G), a filter of the source.'''
    _require(h.target, G)
    return Filter(h.source, h.preimage(G.members))


def pushforward(h, F):
    '''F(h(F)), the filter generated by the image.'''
    _require(h.source, F)
    return Filter(h.target, h.target.saturate(h.image(F.members)))


def pullback_map(h, Phi_source, Phi_target):
    '''Point map Filt(target) → Filt(source), G ↦ h⁻¹(G).'''
    return tuple(Phi_source.point(pullback(h, G)) for G in Phi_target.points)


def pushforward_map(h, Phi_source, Phi_target):
    '''Point map Filt(source) → Filt(target), F ↦ F(h(F)).'''
    return tuple(Phi_target.point(pushforward(h, F)) for F in Phi_source.points)


@attr.s(frozen=True, auto_attribs=True)
class Fixfilters:
    source: FilterFamily
    target: FilterFamily
    certificate: Certificate


def fixfilters(h, cap=None):
    '''
    Source fixfilters (h⁻¹F(h(F)) = F), target fixfilters (F(h(h⁻¹G)) = G) and a
    certificate that pushforward is an order isomorphism between them.
    '''
    sources = all_filters(h.source, cap=cap)
    targets = all_filters(h.target, cap=cap)
    fixed_source = [F for F in sources if pullback(h, pushforward(h, F)) == F]
    fixed_target = [G for G in targets if pushforward(h, pullback(h, G)) == G]
    pairs = [(F.members, pushforward(h, F).members) for F in fixed_source]
    certificate = check_bijection(
        'filtrum.fixfilter-bijection', pairs,
        [F.members for F in fixed_source], [G.members for G in fixed_target],
        inverse=lambda m: pullback(h, Filter(h.target, m)).members)
    if certificate.holds:
        for a, b in pairs:
            for c, d in pairs:
                if is_subset(a, c) != is_subset(b, d):
                    certificate = Certificate(certificate.claim, False, certificate.pairs,
                                              {'reason': 'order not preserved',
                                               'at': [members(a), members(c)]})
                    break
    log.debug("fixfilters: %d source, %d target", len(fixed_source), len(fixed_target))
    return Fixfilters(source=FilterFamily(h.source, tuple(fixed_source)),
                      target=FilterFamily(h.target, tuple(fixed_target)),
                      certificate=certificate)


def fixfilter_homeomorphism(h, Phi_source=None, Phi_target=None):
    '''Pushforward restricted to source fixfilters, as a homeomorphism of subspaces.'''
    Phi_source = Phi_source or build_filtrum(h.source)
    Phi_target = Phi_target or build_filtrum(h.target)
    result = fixfilters(h)
    src_mask = sum(1 << Phi_source.point(F) for F in result.source)
    tgt_mask = sum(1 << Phi_target.point(G) for G in result.target)
    A, src_index = subspace(filtrum_space(Phi_source), src_mask)
    B, tgt_index = subspace(filtrum_space(Phi_target), tgt_mask)
    position = {p: i for i, p in enumerate(tgt_index)}
    pushed = pushforward_map(h, Phi_source, Phi_target)
    mapping = []
    for p in src_index:
        q = pushed[p]
        if q not in position:
            return Certificate('filtrum.fixfilter-homeomorphism', False, (), {'point': p})
        mapping.append(position[q])
    return check_homeomorphism(A, B, mapping, claim='filtrum.fixfilter-homeomorphism')


@attr.s(frozen=True, auto_attribs=True)
class ProductHomeomorphism:
    product: FiniteMonoid
    pairs: Tuple[Tuple[int, Tuple[int, int]], ...]
    certificate: Certificate


def product_homeomorphism(M1, M2, cap=None):
    '''Filt(M1 × M2) → Filt M1 × Filt M2, F ↦ (p1(F), p2(F)), with a homeomorphism certificate.'''
    P, p1, p2 = product_monoid(M1, M2)
    Phi, Phi1, Phi2 = build_filtrum(P, enum_cap=cap), build_filtrum(M1), build_filtrum(M2)
    n2 = len(Phi2)
    pairs = []
    mapping = []
    for F in Phi.points:
        i = Phi1.point(pushforward(p1, F))
        j = Phi2.point(pushforward(p2, F))
        pairs.append((Phi.point(F), (i, j)))
        mapping.append(i * n2 + j)
    target = product_space(filtrum_space(Phi1), filtrum_space(Phi2))
    certificate = check_homeomorphism(filtrum_space(Phi), target, mapping,
                                      claim='filtrum.product-homeomorphism')
    return ProductHomeomorphism(product=P, pairs=tuple(pairs), certificate=certificate)
