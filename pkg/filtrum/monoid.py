'''
Finite commutative monoids given by Cayley tables, their morphisms, and the
constructions the filter theory quantifies over: products, fraction monoids and
the principal-filter quotient.

Elements are dense integer ids 0..size-1; every element set is an int bitset.
'''

import itertools
import logging
from functools import cached_property
from typing import Optional, Tuple

import attr

from filtrum import config
from filtrum.errors import (BadIdentity, BadZero, IndexOutOfRange, LawViolation, NonAssociative,
                            NonCommutative, NoZeroElement, NotAFilter, NotAHom, ShapeError,
                            SizeOverflow)

log = logging.getLogger(__name__)

ElementSet = int


def bit(x):
    return 1 << x


def bits(ids):
    mask = 0
    for x in ids:
        mask |= 1 << x
    return mask


def members(mask):
    out = []
    x = 0
    while mask:
        if mask & 1:
            out.append(x)
        mask >>= 1
        x += 1
    return out


def popcount(mask):
    return bin(mask).count('1')


def lowest(mask):
    return (mask & -mask).bit_length() - 1


def is_subset(a, b):
    return a & ~b == 0


@attr.s(frozen=True, auto_attribs=True)
class FiniteMonoid:
    size: int
    mul: Tuple[Tuple[int, ...], ...]
    one: int
    zero: Optional[int] = None
    name: str = attr.ib(default='', eq=False)

    def __call__(self, x, y):
        return self.mul[x][y]

    @property
    def elements(self):
        return range(self.size)

    @cached_property
    def full(self):
        return (1 << self.size) - 1

    @cached_property
    def divisors(self):
        '''divisors[f] is the bitset of all g with g·a = f for some a.'''
        table = [0] * self.size
        for g in range(self.size):
            for f in self.mul[g]:
                table[f] |= 1 << g
        return tuple(table)

    @cached_property
    def units(self):
        return bits(x for x in range(self.size) if self.one in self.mul[x])

    def power(self, g, n):
        result = self.one
        for _ in range(n):
            result = self.mul[result][g]
        return result

    def powers(self, g):
        '''g^1 .. g^size; the orbit has closed its cycle by then.'''
        out = []
        current = g
        for _ in range(self.size):
            out.append(current)
            current = self.mul[current][g]
        return out

    def product(self, ids):
        result = self.one
        for x in ids:
            result = self.mul[result][x]
        return result

    def image(self, mask, x):
        '''Bitset {x·s : s in mask}.'''
        row = self.mul[x]
        out = 0
        for s in members(mask):
            out |= 1 << row[s]
        return out

    def filter_violation(self, mask):
        '''None when mask satisfies the three filter axioms, else (axiom, witness).'''
        if not mask >> self.one & 1:
            return 1, (self.one,)
        for f in members(mask):
            missing = self.divisors[f] & ~mask
            if missing:
                return 3, (lowest(missing), f)
        ids = members(mask)
        for i, f in enumerate(ids):
            row = self.mul[f]
            for g in ids[i:]:
                if not mask >> row[g] & 1:
                    return 2, (f, g)
        return None

    def saturate(self, mask):
        '''Divisor closure of the submonoid generated by mask.'''
        gens = members(mask)
        closure = 1 << self.one
        frontier = [self.one]
        while frontier:
            x = frontier.pop()
            row = self.mul[x]
            for s in gens:
                y = row[s]
                if not closure >> y & 1:
                    closure |= 1 << y
                    frontier.append(y)
        result = 0
        for x in members(closure):
            result |= self.divisors[x]
        return result

    def require_filter(self, mask):
        violation = self.filter_violation(mask)
        if violation is not None:
            axiom, witness = violation
            raise NotAFilter('set {0} violates filter axiom {1}'.format(members(mask), axiom),
                             axiom=axiom, witness=list(witness))
        return mask

    def check_index(self, *ids):
        for x in ids:
            if not isinstance(x, int) or not 0 <= x < self.size:
                raise IndexOutOfRange('element id {0} outside 0..{1}'.format(x, self.size - 1),
                                      element=x, size=self.size)


def validate_monoid(raw_table, one, zero=None, name='', warn_undeclared_zero=True):
    '''
    Validates a raw Cayley table and returns a FiniteMonoid.

    Laws are checked in the order associativity, commutativity, identity, zero;
    the first violation is raised with its witness.
    '''
    if not isinstance(raw_table, (list, tuple)) or not raw_table:
        raise ShapeError('table must be a non-empty square list of rows')
    size = len(raw_table)
    for row in raw_table:
        if not isinstance(row, (list, tuple)) or len(row) != size:
            raise ShapeError('table must be {0}x{0}'.format(size), size=size)
        for entry in row:
            if isinstance(entry, bool) or not isinstance(entry, int) or not 0 <= entry < size:
                raise ShapeError('table entry {0} out of range'.format(entry), size=size)
    for label, value in (('one', one), ('zero', zero)):
        if value is None and label == 'zero':
            continue
        if isinstance(value, bool) or not isinstance(value, int) or not 0 <= value < size:
            raise ShapeError('{0} must be an element id'.format(label), size=size)

    mul = tuple(tuple(row) for row in raw_table)
    for x, y, z in itertools.product(range(size), repeat=3):
        if mul[mul[x][y]][z] != mul[x][mul[y][z]]:
            raise NonAssociative('(x·y)·z != x·(y·z)', x=x, y=y, z=z)
    for x in range(size):
        for y in range(x + 1, size):
            if mul[x][y] != mul[y][x]:
                raise NonCommutative('x·y != y·x', x=x, y=y)
    for x in range(size):
        if mul[one][x] != x:
            raise BadIdentity('one·x != x', one=one, x=x)
    if zero is not None:
        for x in range(size):
            if mul[zero][x] != zero:
                raise BadZero('zero·x != zero', zero=zero, x=x)
    elif warn_undeclared_zero:
        for z in range(size):
            if all(mul[z][x] == z for x in range(size)):
                log.warning("monoid %s has an undeclared annihilator %d", name or '<anonymous>', z)
                break

    return FiniteMonoid(size=size, mul=mul, one=one, zero=zero, name=name)


def divides(M, g, f):
    M.check_index(g, f)
    return bool(M.divisors[f] >> g & 1)


def units(M):
    return M.units


def nonzerodivisors(M):
    if M.zero is None:
        raise NoZeroElement('monoid has no zero element')
    out = 0
    for f in range(M.size):
        if all(g == M.zero for g in range(M.size) if M.mul[f][g] == M.zero):
            out |= 1 << f
    return out


@attr.s(frozen=True, auto_attribs=True)
class MonoidHom:
    source: FiniteMonoid
    target: FiniteMonoid
    map: Tuple[int, ...]

    def __call__(self, x):
        return self.map[x]

    @cached_property
    def preserves_zero(self):
        if self.source.zero is None or self.target.zero is None:
            return False
        return self.map[self.source.zero] == self.target.zero

    @cached_property
    def is_surjective(self):
        return len(set(self.map)) == self.target.size

    def image(self, mask):
        out = 0
        for x in members(mask):
            out |= 1 << self.map[x]
        return out

    def preimage(self, mask):
        return bits(x for x in range(self.source.size) if mask >> self.map[x] & 1)


def validate_hom(source, target, raw_map):
    if not isinstance(raw_map, (list, tuple)) or len(raw_map) != source.size:
        raise ShapeError('map must list one target id per source element', size=source.size)
    for y in raw_map:
        if isinstance(y, bool) or not isinstance(y, int) or not 0 <= y < target.size:
            raise ShapeError('map entry {0} out of range'.format(y), size=target.size)
    if raw_map[source.one] != target.one:
        raise NotAHom('one is not mapped to one', x=source.one)
    for x in range(source.size):
        for y in range(x, source.size):
            if raw_map[source.mul[x][y]] != target.mul[raw_map[x]][raw_map[y]]:
                raise NotAHom('map(x·y) != map(x)·map(y)', x=x, y=y)
    return MonoidHom(source=source, target=target, map=tuple(raw_map))


def identity_hom(M):
    return MonoidHom(source=M, target=M, map=tuple(range(M.size)))


def compose(psi, phi):
    '''psi ∘ phi.'''
    if phi.target != psi.source:
        raise NotAHom('cannot compose: carriers differ')
    return MonoidHom(source=phi.source, target=psi.target,
                     map=tuple(psi.map[y] for y in phi.map))


def product_monoid(M1, M2, cap=None):
    '''
    Componentwise product with the row-major pairing id = i1·|M2| + i2.

    Returns (product, projection onto M1, projection onto M2).
    '''
    cap = config.current().max_product_size if cap is None else cap
    n1, n2 = M1.size, M2.size
    if n1 * n2 > cap:
        raise SizeOverflow('product monoid', n1 * n2, cap)

    def pair(i1, i2):
        return i1 * n2 + i2

    mul = tuple(
        tuple(pair(M1.mul[x // n2][y // n2], M2.mul[x % n2][y % n2]) for y in range(n1 * n2))
        for x in range(n1 * n2))
    zero = None
    if M1.zero is not None and M2.zero is not None:
        zero = pair(M1.zero, M2.zero)
    name = '{0}x{1}'.format(M1.name or 'M1', M2.name or 'M2')
    P = FiniteMonoid(size=n1 * n2, mul=mul, one=pair(M1.one, M2.one), zero=zero, name=name)
    p1 = MonoidHom(source=P, target=M1, map=tuple(x // n2 for x in range(n1 * n2)))
    p2 = MonoidHom(source=P, target=M2, map=tuple(x % n2 for x in range(n1 * n2)))
    return P, p1, p2


def fraction_monoid(M, F):
    '''
    Localization M_F together with the canonical hom a ↦ a/1.

    Classes of pairs (a, f) under (a,f) ~ (b,g) iff a·g·h = b·f·h for some h in F;
    each class is represented by its lexicographically smallest pair and classes are
    numbered in the order of their representatives.
    '''
    F = getattr(F, 'members', F)
    M.require_filter(F)
    denominators = members(F)
    mul = M.mul

    def equivalent(p, q):
        (a, f), (b, g) = p, q
        left, right = mul[a][g], mul[b][f]
        return any(mul[left][h] == mul[right][h] for h in denominators)

    reps = []
    class_of = {}
    for pair in itertools.product(range(M.size), denominators):
        for index, rep in enumerate(reps):
            if equivalent(pair, rep):
                class_of[pair] = index
                break
        else:
            class_of[pair] = len(reps)
            reps.append(pair)

    table = [[class_of[(mul[a][b], mul[f][g])] for (b, g) in reps] for (a, f) in reps]
    zero = class_of[(M.zero, M.one)] if M.zero is not None else None
    fractions = validate_monoid(table, class_of[(M.one, M.one)], zero,
                                name='{0}_F'.format(M.name or 'M'), warn_undeclared_zero=False)
    hom = MonoidHom(source=M, target=fractions, map=tuple(class_of[(a, M.one)] for a in range(M.size)))
    log.debug("fraction monoid of %d elements over %d denominators has %d classes",
              M.size, len(denominators), fractions.size)
    return fractions, hom


def principal_quotient(M):
    '''Quotient by f ~ g iff F(f) = F(g); classes are numbered by their smallest element.'''
    principal = [M.saturate(1 << f) for f in range(M.size)]
    class_ids = {}
    for f in range(M.size):
        class_ids.setdefault(principal[f], len(class_ids))
    cls = tuple(class_ids[principal[f]] for f in range(M.size))
    reps = [None] * len(class_ids)
    for f in range(M.size):
        if reps[cls[f]] is None:
            reps[cls[f]] = f

    for x, x2 in itertools.product(range(M.size), repeat=2):
        if cls[x] != cls[x2]:
            continue
        for y in range(M.size):
            if cls[M.mul[x][y]] != cls[M.mul[x2][y]]:
                raise LawViolation('monoid.principal-quotient-well-defined',
                                   {'x': x, 'x2': x2, 'y': y})

    table = [[cls[M.mul[a][b]] for b in reps] for a in reps]
    zero = cls[M.zero] if M.zero is not None else None
    quotient = validate_monoid(table, cls[M.one], zero, name='{0}/~'.format(M.name or 'M'),
                               warn_undeclared_zero=False)
    return quotient, MonoidHom(source=M, target=quotient, map=cls)


def _signature(M, x):
    return (M.mul[x][x] == x, popcount(M.divisors[x]), sum(1 for y in range(M.size) if M.mul[x][y] == x))


def find_isomorphism(M, N):
    '''A bijection M → N preserving one and the table, or None.'''
    if M.size != N.size:
        return None
    n = M.size
    sig_m = [_signature(M, x) for x in range(n)]
    sig_n = [_signature(N, y) for y in range(n)]
    if sorted(sig_m) != sorted(sig_n):
        return None

    order = [M.one] + [x for x in range(n) if x != M.one]
    assignment = [None] * n
    used = [False] * n

    def consistent(x):
        fx = assignment[x]
        for y in range(n):
            fy = assignment[y]
            if fy is None:
                continue
            xy = M.mul[x][y]
            if assignment[xy] is not None and assignment[xy] != N.mul[fx][fy]:
                return False
        return True

    def search(position):
        if position == n:
            return True
        x = order[position]
        candidates = [N.one] if x == M.one else range(n)
        for y in candidates:
            if used[y] or sig_n[y] != sig_m[x]:
                continue
            assignment[x] = y
            used[y] = True
            if consistent(x) and search(position + 1):
                return True
            assignment[x] = None
            used[y] = False
        return False

    if not search(0):
        return None
    return tuple(assignment)


def trivial_monoid():
    return FiniteMonoid(size=1, mul=((0,),), one=0, zero=0, name='trivial')


def zn_monoid(n):
    '''(Z/n, ·) with zero 0.'''
    if n == 1:
        return trivial_monoid()
    table = [[(x * y) % n for y in range(n)] for x in range(n)]
    return validate_monoid(table, 1, 0, name='Z{0}'.format(n))


def cyclic_group(n):
    '''(Z/n, +) as a monoid; a group, so it has exactly one filter.'''
    table = [[(x + y) % n for y in range(n)] for x in range(n)]
    return validate_monoid(table, 0, 0 if n == 1 else None, name='C{0}'.format(n))


def semilattice_chain(k):
    '''Chain 0 > 1 > ... > k-1 under meet; 0 is the top (one), k-1 the bottom (zero).'''
    table = [[max(x, y) for y in range(k)] for x in range(k)]
    return validate_monoid(table, 0, k - 1, name='chain{0}'.format(k))


def free_truncated_monoid(nprimes, bound):
    '''
    Exponent vectors in {0..bound}^nprimes under saturating addition.

    Vector ids are mixed-radix with the first prime most significant. The all-bound
    vector absorbs everything; it is a truncation artifact and is not declared zero.
    '''
    base = bound + 1
    size = base ** nprimes
    vectors = list(itertools.product(range(base), repeat=nprimes))
    index = {v: i for i, v in enumerate(vectors)}
    table = [[index[tuple(min(a + b, bound) for a, b in zip(u, v))] for v in vectors] for u in vectors]
    M = validate_monoid(table, index[(0,) * nprimes], None, name='free{0}^{1}'.format(nprimes, bound),
                        warn_undeclared_zero=False)
    return M, vectors
