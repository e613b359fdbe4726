'''
Finite commutative rings seen through their multiplicative monoids: ideals,
prime ideals, the prime decomposition of filter complements, ultrafilter duality,
boolean rings and fixness modulo an ideal.
'''

import itertools
import logging
from functools import cached_property
from typing import Tuple

import attr
from more_itertools import powerset

from filtrum import config
from filtrum.certificate import Certificate, check_bijection
from filtrum.errors import (BadIdentity, BadNegation, BadZero, CapExceeded, LawViolation,
                            NonAssociative, NonCommutative, NonDistributive, NotAFilter,
                            NotAnIdeal, NotBoolean, ShapeError, SizeOverflow, ZeroRing)
from filtrum.filt import pullback, pushforward
from filtrum.filters import Filter, all_filters, ultrafilters
from filtrum.monoid import FiniteMonoid, MonoidHom, bit, bits, is_subset, members

log = logging.getLogger(__name__)


@attr.s(frozen=True, auto_attribs=True)
class FiniteRing:
    size: int
    add: Tuple[Tuple[int, ...], ...]
    mul: Tuple[Tuple[int, ...], ...]
    zero: int
    one: int
    name: str = attr.ib(default='', eq=False)

    @cached_property
    def neg(self):
        return tuple(self.add[x].index(self.zero) for x in range(self.size))

    @cached_property
    def full(self):
        return (1 << self.size) - 1

    def sub(self, x, y):
        return self.add[x][self.neg[y]]

    @cached_property
    def monoid(self):
        return FiniteMonoid(size=self.size, mul=self.mul, one=self.one, zero=self.zero,
                            name=self.name)


@attr.s(frozen=True, auto_attribs=True)
class Ideal:
    carrier: FiniteRing = attr.ib(eq=False, repr=False)
    members: int

    def __contains__(self, x):
        return bool(self.members >> x & 1)

    def elements(self):
        return members(self.members)

    def complement(self):
        return self.carrier.full & ~self.members


def _table(raw, size, label):
    if not isinstance(raw, (list, tuple)) or len(raw) != size:
        raise ShapeError('{0} table must be {1}x{1}'.format(label, size), size=size)
    for row in raw:
        if not isinstance(row, (list, tuple)) or len(row) != size:
            raise ShapeError('{0} table must be {1}x{1}'.format(label, size), size=size)
        for entry in row:
            if isinstance(entry, bool) or not isinstance(entry, int) or not 0 <= entry < size:
                raise ShapeError('{0} entry {1} out of range'.format(label, entry), size=size)
    return tuple(tuple(row) for row in raw)


def _check_commutative_monoid(table, size, label):
    for x, y, z in itertools.product(range(size), repeat=3):
        if table[table[x][y]][z] != table[x][table[y][z]]:
            raise NonAssociative('{0} is not associative'.format(label), x=x, y=y, z=z)
    for x in range(size):
        for y in range(x + 1, size):
            if table[x][y] != table[y][x]:
                raise NonCommutative('{0} is not commutative'.format(label), x=x, y=y)


def _neutral(table, size):
    for e in range(size):
        if all(table[e][x] == x for x in range(size)):
            return e
    return None


def validate_ring(raw_add, raw_mul, zero=None, one=None, name=''):
    '''
    Validates addition and multiplication tables; zero and one are derived when not given.
    '''
    if not isinstance(raw_add, (list, tuple)) or not raw_add:
        raise ShapeError('ring tables must be non-empty')
    size = len(raw_add)
    add = _table(raw_add, size, 'add')
    mul = _table(raw_mul, size, 'mul')
    _check_commutative_monoid(add, size, 'addition')
    _check_commutative_monoid(mul, size, 'multiplication')

    zero = _neutral(add, size) if zero is None else zero
    if zero is None or any(add[zero][x] != x for x in range(size)):
        raise BadZero('addition has no neutral element', zero=zero)
    for x in range(size):
        if zero not in add[x]:
            raise BadNegation('element has no additive inverse', x=x)
    one = _neutral(mul, size) if one is None else one
    if one is None or any(mul[one][x] != x for x in range(size)):
        raise BadIdentity('multiplication has no neutral element', one=one)
    for x, y, z in itertools.product(range(size), repeat=3):
        if mul[x][add[y][z]] != add[mul[x][y]][mul[x][z]]:
            raise NonDistributive('x·(y+z) != x·y + x·z', x=x, y=y, z=z)
    return FiniteRing(size=size, add=add, mul=mul, zero=zero, one=one, name=name)


def zn_ring(n):
    add = [[(x + y) % n for y in range(n)] for x in range(n)]
    mul = [[(x * y) % n for y in range(n)] for x in range(n)]
    return FiniteRing(size=n, add=tuple(map(tuple, add)), mul=tuple(map(tuple, mul)),
                      zero=0, one=1 % n, name='Z{0}'.format(n))


def product_ring(R, S):
    '''Componentwise ring with the row-major pairing id = i·|S| + j.'''
    cap = config.current().max_ring_size
    n, m = R.size, S.size
    if n * m > cap:
        raise SizeOverflow('product ring', n * m, cap)

    def lift(op_r, op_s):
        return tuple(tuple(op_r[x // m][y // m] * m + op_s[x % m][y % m] for y in range(n * m))
                     for x in range(n * m))

    return FiniteRing(size=n * m, add=lift(R.add, S.add), mul=lift(R.mul, S.mul),
                      zero=R.zero * m + S.zero, one=R.one * m + S.one,
                      name='{0}x{1}'.format(R.name or 'R', S.name or 'S'))


def boolean_ring(k):
    '''(Z/2)^k.'''
    R = zn_ring(2)
    for _ in range(k - 1):
        R = product_ring(R, zn_ring(2))
    return R


def mult_monoid(R):
    '''(R, ·, 1) with the ring zero as its zero.'''
    return R.monoid


def is_ideal(R, mask):
    if not mask >> R.zero & 1:
        return False
    ids = members(mask)
    for x in ids:
        for y in ids:
            if not mask >> R.add[x][y] & 1:
                return False
        for r in range(R.size):
            if not mask >> R.mul[r][x] & 1:
                return False
    return True


def _require_ideal(R, a):
    mask = getattr(a, 'members', a)
    if not is_ideal(R, mask):
        raise NotAnIdeal('set is not an ideal', members=members(mask))
    return mask


def ideal_generated(R, S):
    '''Smallest ideal containing the element set S.'''
    mask = getattr(S, 'members', S) | bit(R.zero)
    frontier = members(mask)
    while frontier:
        x = frontier.pop()
        new = []
        for r in range(R.size):
            new.append(R.mul[r][x])
        for y in members(mask):
            new.append(R.add[x][y])
        for z in new:
            if not mask >> z & 1:
                mask |= 1 << z
                frontier.append(z)
    return Ideal(R, mask)


def _enforce_cap(R, cap):
    cap = config.current().max_ring_size if cap is None else cap
    if R.size > cap:
        raise CapExceeded('ring', R.size, cap)


def all_ideals(R, method='closure', cap=None):
    '''Every ideal, sorted by bitmask; method='oracle' scans all subsets.'''
    _enforce_cap(R, cap)
    if method == 'oracle':
        limit = config.current().oracle_limit
        if R.size > limit:
            raise CapExceeded('subset oracle', R.size, limit)
        masks = [m for m in range(1 << R.size) if is_ideal(R, m)]
    else:
        start = bit(R.zero)
        seen = {start}
        queue = [start]
        while queue:
            a = queue.pop()
            for x in members(R.full & ~a):
                b = ideal_generated(R, a | bit(x)).members
                if b not in seen:
                    seen.add(b)
                    queue.append(b)
        masks = sorted(seen)
    return [Ideal(R, m) for m in masks]


def is_prime(R, mask):
    complement = R.full & ~mask
    if not complement >> R.one & 1:
        return False
    return all(complement >> R.mul[x][y] & 1 for x in members(complement) for y in members(complement))


def prime_ideals(R, cap=None):
    return [a for a in all_ideals(R, cap=cap) if is_prime(R, a.members)]


def minimal_primes(R, cap=None):
    primes = [p.members for p in prime_ideals(R, cap=cap)]
    return [Ideal(R, p) for p in primes if not any(q != p and is_subset(q, p) for q in primes)]


def minimal_primes_over(R, a, cap=None):
    a = _require_ideal(R, a)
    over = [p.members for p in prime_ideals(R, cap=cap) if is_subset(a, p.members)]
    return [Ideal(R, p) for p in over if not any(q != p and is_subset(q, p) for q in over)]


def filter_complement_decomposition(R, F, cap=None):
    '''
    Primes whose union is the complement of F, after checking the converse: the
    complement of every union of primes is a filter.
    '''
    mask = getattr(F, 'members', F)
    M = mult_monoid(R)
    if M.filter_violation(mask) is not None:
        raise NotAFilter('set is not a filter of the multiplicative monoid', members=members(mask))
    primes = prime_ideals(R, cap=cap)
    for family in powerset(primes):
        union = 0
        for p in family:
            union |= p.members
        if M.filter_violation(R.full & ~union) is not None:
            raise LawViolation('ring.prime-union-complement-is-filter',
                               {'primes': [p.elements() for p in family]})
    chosen = [p for p in primes if not p.members & mask]
    union = 0
    for p in chosen:
        union |= p.members
    if union != R.full & ~mask:
        raise LawViolation('ring.filter-complement-is-prime-union', {'filter': members(mask)})
    return chosen


def minimal_prime_ultrafilter_duality(R, cap=None):
    '''Certificate that complementation pairs ultrafilters with minimal primes.'''
    if R.size == 1 or R.zero == R.one:
        raise ZeroRing('the zero ring has no primes')
    ultra = [U.members for U in ultrafilters(mult_monoid(R), cap=cap)]
    minimal = [p.members for p in minimal_primes(R, cap=cap)]
    pairs = [(U, R.full & ~U) for U in ultra]
    return check_bijection('ring.minimal-prime-ultrafilter-duality', pairs, ultra, minimal,
                           inverse=lambda p: R.full & ~p)


def one_minus(R, mask):
    return bits(R.sub(R.one, e) for e in members(mask))


def boolean_ideal_filter_correspondence(R, cap=None):
    '''
    For a boolean ring: a ↦ {1 - e : e ∈ a} is a bijection ideals → filters with inverse
    of the same form; a filter is an ultrafilter iff it contains exactly one of e, 1 - e;
    every filter is the intersection of the ultrafilters above it.
    '''
    for x in range(R.size):
        if R.mul[x][x] != x:
            raise NotBoolean('x·x != x', x=x)
    M = mult_monoid(R)
    ideals = [a.members for a in all_ideals(R, cap=cap)]
    filters = all_filters(M, cap=cap).masks
    pairs = [(a, one_minus(R, a)) for a in ideals]
    certificate = check_bijection('ring.boolean-ideal-filter-correspondence', pairs, ideals,
                                  filters, inverse=lambda F: one_minus(R, F))
    if not certificate.holds:
        return certificate
    ultra = ultrafilters(M, cap=cap).masks if R.size > 1 else []
    for F in filters:
        consistent = not F >> R.zero & 1
        exactly_one = all((F >> e & 1) != (F >> R.sub(R.one, e) & 1) for e in range(R.size))
        if consistent and (F in ultra) != exactly_one:
            return Certificate(certificate.claim, False, certificate.pairs,
                               {'reason': 'ultrafilter criterion', 'filter': members(F)})
        meet = R.full
        for U in ultra:
            if is_subset(F, U):
                meet &= U
        if meet != F:
            return Certificate(certificate.claim, False, certificate.pairs,
                               {'reason': 'not an intersection of ultrafilters', 'filter': members(F)})
    return certificate


def quotient_ring(R, a):
    '''R/a with cosets numbered by their smallest element, and the multiplicative quotient hom.'''
    a = _require_ideal(R, a)
    coset_of = {}
    reps = []
    for x in range(R.size):
        coset = frozenset(R.add[x][i] for i in members(a))
        if coset not in coset_of:
            coset_of[coset] = len(reps)
            reps.append(x)
    cls = tuple(coset_of[frozenset(R.add[x][i] for i in members(a))] for x in range(R.size))
    add = tuple(tuple(cls[R.add[x][y]] for y in reps) for x in reps)
    mul = tuple(tuple(cls[R.mul[x][y]] for y in reps) for x in reps)
    Q = FiniteRing(size=len(reps), add=add, mul=mul, zero=cls[R.zero], one=cls[R.one],
                   name='{0}/a'.format(R.name or 'R'))
    return Q, MonoidHom(source=mult_monoid(R), target=mult_monoid(Q), map=cls)


def fix_modulo_ideal(R, a, F):
    '''
    F is fix modulo a iff f + x ∈ F for all f ∈ F, x ∈ a; cross-checked against the
    fixfilter round trip along R → R/a.
    '''
    a = _require_ideal(R, a)
    mask = getattr(F, 'members', F)
    if mult_monoid(R).filter_violation(mask) is not None:
        raise NotAFilter('set is not a filter of the multiplicative monoid', members=members(mask))
    criterion = all(mask >> R.add[f][x] & 1 for f in members(mask) for x in members(a))
    _, h = quotient_ring(R, a)
    G = Filter(mult_monoid(R), mask)
    round_trip = pullback(h, pushforward(h, G)) == G
    if criterion != round_trip:
        raise LawViolation('ring.fix-modulo-ideal', {'filter': members(mask), 'ideal': members(a)})
    return criterion


def nilradical(R):
    return Ideal(R, bits(x for x in range(R.size) if R.zero in mult_monoid(R).powers(x)))


def smallest_fix_filter(R, a):
    '''F(1 + a), the smallest filter that is fix modulo a.'''
    a = _require_ideal(R, a)
    M = mult_monoid(R)
    return Filter(M, M.saturate(bits(R.add[R.one][x] for x in members(a))))


def fraction_kernel(R, F):
    '''Kernel of R → R_F: the x with x·f = 0 for some f ∈ F.'''
    mask = getattr(F, 'members', F)
    return Ideal(R, bits(x for x in range(R.size)
                         if any(R.mul[x][f] == R.zero for f in members(mask))))


@attr.s(frozen=True, auto_attribs=True)
class Fixness:
    all_filters: bool
    prime_complements: bool


def fixness_modulo(R, a, cap=None):
    '''Whether every filter, and whether every prime complement, is fix modulo a.'''
    a = _require_ideal(R, a)
    filters_fix = all(fix_modulo_ideal(R, a, F) for F in all_filters(mult_monoid(R), cap=cap))
    primes_fix = all(fix_modulo_ideal(R, a, p.complement()) for p in prime_ideals(R, cap=cap))
    return Fixness(all_filters=filters_fix, prime_complements=primes_fix)
