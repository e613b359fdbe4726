'''
Filters of finite commutative monoids: the axioms, generation, enumeration,
consistency, ultrafilters and maximal filters avoiding a pseudoideal.
'''

import logging
from typing import Optional, Tuple

import attr

from filtrum import config
from filtrum.certificate import chunked_ranges, ordered_map
from filtrum.errors import (CapExceeded, CarrierMismatch, LawViolation, NotDisjoint,
                            NotMultiplicativelyClosed, NotPseudoideal, NoZeroElement,
                            ZeroEqualsOne)
from filtrum.monoid import FiniteMonoid, bit, is_subset, members, popcount

log = logging.getLogger(__name__)


@attr.s(frozen=True, auto_attribs=True, order=False)
class Filter:
    carrier: FiniteMonoid = attr.ib(eq=False, repr=False)
    members: int

    def __contains__(self, x):
        return bool(self.members >> x & 1)

    def __len__(self):
        return popcount(self.members)

    def __le__(self, other):
        return is_subset(self.members, other.members)

    def elements(self):
        return members(self.members)

    def label(self):
        return '{' + ','.join(str(x) for x in self.elements()) + '}'


@attr.s(frozen=True, auto_attribs=True)
class FilterFamily:
    carrier: FiniteMonoid = attr.ib(eq=False, repr=False)
    filters: Tuple[Filter, ...]

    @classmethod
    def from_masks(cls, M, masks):
        return cls(M, tuple(Filter(M, m) for m in sorted(set(masks))))

    def __iter__(self):
        return iter(self.filters)

    def __len__(self):
        return len(self.filters)

    def __getitem__(self, i):
        return self.filters[i]

    @property
    def masks(self):
        return [F.members for F in self.filters]


@attr.s(frozen=True, auto_attribs=True)
class FilterCheck:
    holds: bool
    axiom: Optional[int] = None
    witness: Tuple[int, ...] = ()

    def __bool__(self):
        return self.holds


def _mask(S):
    return S.members if isinstance(S, Filter) else S


def _same_carrier(M, F):
    if isinstance(F, Filter) and F.carrier != M:
        raise CarrierMismatch('filter belongs to another monoid')


def is_filter(M, S):
    '''
    Checks the filter axioms: (1) one in S, (2) S·S ⊆ S, (3) divisors of members are members.

    Returns a FilterCheck that is falsy on failure and names the first violated axiom.
    '''
    violation = M.filter_violation(_mask(S))
    if violation is None:
        return FilterCheck(True)
    axiom, witness = violation
    return FilterCheck(False, axiom, witness)


def generate(M, S):
    return Filter(M, M.saturate(_mask(S)))


def principal_filter(M, f):
    M.check_index(f)
    return Filter(M, M.saturate(bit(f)))


def units_filter(M):
    return Filter(M, M.units)


def _enforce_cap(M, cap):
    cap = config.current().max_enum_size if cap is None else cap
    if M.size > cap:
        raise CapExceeded('monoid', M.size, cap)


def _scan(M, masks):
    required = M.units
    return [m for m in masks if m & required == required and M.filter_violation(m) is None]


def _oracle(M, workers):
    limit = config.current().oracle_limit
    if M.size > limit:
        raise CapExceeded('subset oracle', M.size, limit)
    parts = chunked_ranges(1 << M.size, workers)
    found = []
    for chunk in ordered_map(lambda part: _scan(M, part), parts, workers):
        found.extend(chunk)
    return found


def _closure(M):
    start = M.saturate(0)
    seen = {start}
    queue = [start]
    while queue:
        F = queue.pop()
        for x in members(M.full & ~F):
            G = M.saturate(F | bit(x))
            if G not in seen:
                seen.add(G)
                queue.append(G)
    return seen


def all_filters(M, method='closure', cap=None, workers=None):
    '''
    Every filter of M, sorted ascending by bitmask.

    method='closure' walks the lattice F ↦ F(F ∪ {x}) from the unit filter;
    method='oracle' scans all 2^|M| subsets with the axiom check.
    '''
    _enforce_cap(M, cap)
    workers = config.current().workers if workers is None else workers
    if method == 'oracle':
        masks = _oracle(M, workers)
    elif method == 'closure':
        masks = _closure(M)
    else:
        raise ValueError('unknown method {0}'.format(method))
    family = FilterFamily.from_masks(M, masks)
    log.debug("%d filters enumerated for %s (%s)", len(family), M.name or '<monoid>', method)
    return family


def is_consistent(F):
    '''zero ∉ F; every filter counts as consistent when the carrier has no zero.'''
    M = F.carrier
    if M.zero is None:
        return True
    return M.zero not in F


def nilpotent(M, g):
    if M.zero is None:
        raise NoZeroElement('monoid has no zero element')
    M.check_index(g)
    return M.zero in M.powers(g)


def is_reduced(M):
    return all(not nilpotent(M, g) for g in range(M.size) if g != M.zero)


def _criterion(M, mask, target):
    '''∀g ∉ F ∃n ≤ |M|, f ∈ F: g^n·f ∈ target; returns a failing g or None.'''
    ids = members(mask)
    for g in members(M.full & ~mask):
        hit = False
        for p in M.powers(g):
            row = M.mul[p]
            if any(target >> row[f] & 1 for f in ids):
                hit = True
                break
        if not hit:
            return g
    return None


def ultrafilter_criterion(M, F):
    '''The zero-product test for maximality among consistent filters.'''
    if M.zero is None:
        raise NoZeroElement('monoid has no zero element')
    _same_carrier(M, F)
    return _criterion(M, _mask(F), bit(M.zero)) is None


def _maximal(masks):
    return [m for m in masks if not any(m != n and is_subset(m, n) for n in masks)]


def ultrafilters(M, cap=None):
    '''Maximal consistent filters, each re-verified against the zero-product criterion.'''
    if M.zero is None:
        raise NoZeroElement('monoid has no zero element')
    if M.zero == M.one:
        raise ZeroEqualsOne('zero equals one; there are no consistent filters')
    consistent = [m for m in all_filters(M, cap=cap).masks if not m >> M.zero & 1]
    maximal = set(_maximal(consistent))
    for m in consistent:
        if ultrafilter_criterion(M, m) != (m in maximal):
            raise LawViolation('filters.ultrafilter-criterion', {'filter': members(m)})
    return FilterFamily.from_masks(M, maximal)


def is_multiplicatively_closed(M, S):
    ids = members(S)
    return all(S >> M.mul[f][g] & 1 for f in ids for g in ids)


def is_pseudoideal(M, a):
    return all(M.image(M.full, x) & ~a == 0 for x in members(a))


def maximal_filters_avoiding(M, S, a, cap=None):
    '''
    Filters maximal among those containing S and disjoint from a.

    S must be multiplicatively closed, a a pseudoideal, and the two disjoint.
    '''
    S, a = _mask(S), _mask(a)
    if not is_multiplicatively_closed(M, S):
        raise NotMultiplicativelyClosed('S is not closed under multiplication', members=members(S))
    if not is_pseudoideal(M, a):
        raise NotPseudoideal('a is not closed under multiplication by monoid elements',
                             members=members(a))
    if S & a:
        raise NotDisjoint('S and a intersect', common=members(S & a))
    candidates = [m for m in all_filters(M, cap=cap).masks if is_subset(S, m) and not m & a]
    maximal = _maximal(candidates)
    for m in maximal:
        g = _criterion(M, m, a)
        if g is not None:
            raise LawViolation('filters.avoiding-criterion', {'filter': members(m), 'g': g})
    return FilterFamily.from_masks(M, maximal)


def intersection_of(M, masks):
    out = M.full
    for m in masks:
        out &= m
    return out
