'''
The free commutative monoid over a finite prime set. Elements are exponent
vectors; a filter is determined by the set of primes it contains, so principal
filters, intersections and coprimality reduce to supports.
'''

from typing import FrozenSet, Tuple

import attr

from filtrum.errors import ArityMismatch, BadBound, EmptyList


@attr.s(frozen=True, auto_attribs=True)
class FactorialElement:
    exponents: Tuple[int, ...] = attr.ib(converter=tuple)

    @exponents.validator
    def _non_negative(self, attribute, value):
        if any(e < 0 for e in value):
            raise ValueError('exponents must be non-negative')

    @property
    def support(self):
        return frozenset(i for i, e in enumerate(self.exponents) if e)

    def is_unit(self):
        return not self.support

    def __mul__(self, other):
        _same_arity([self.exponents, other.exponents])
        return FactorialElement(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __pow__(self, n):
        return FactorialElement(tuple(e * n for e in self.exponents))

    def divides(self, other):
        _same_arity([self.exponents, other.exponents])
        return all(a <= b for a, b in zip(self.exponents, other.exponents))


@attr.s(frozen=True, auto_attribs=True)
class PrimeSubsetFilter:
    primes: FrozenSet[int] = attr.ib(converter=frozenset)

    def __contains__(self, g):
        return member(g, self)


def unit(nprimes):
    return FactorialElement((0,) * nprimes)


def prime(i, nprimes):
    return FactorialElement(tuple(1 if j == i else 0 for j in range(nprimes)))


def _same_arity(vectors):
    lengths = {len(v) for v in vectors}
    if len(lengths) > 1:
        raise ArityMismatch('vectors have different lengths', lengths=sorted(lengths))


def principal_filter(f):
    '''F(f): g ∈ F(f) iff g divides a power of f iff support(g) ⊆ support(f).'''
    return PrimeSubsetFilter(f.support)


def member(g, F):
    return g.support <= F.primes


def member_by_powers(g, f, bound):
    '''Smallest n ≤ bound with g | f^n, or None.'''
    if bound < 1:
        raise BadBound('bound must be at least 1', bound=bound)
    for n in range(1, bound + 1):
        if g.divides(f ** n):
            return n
    return None


def intersect_filters(filters):
    filters = list(filters)
    if not filters:
        raise EmptyList('at least one filter is required')
    primes = filters[0].primes
    for F in filters[1:]:
        primes &= F.primes
    return PrimeSubsetFilter(primes)


def generator(F, nprimes):
    '''An element whose principal filter is F.'''
    return FactorialElement(tuple(1 if i in F.primes else 0 for i in range(nprimes)))


def coprime(f, g):
    return not (f.support & g.support)


def regenerate(F, nprimes):
    '''F(F ∩ P): the filter generated by the primes F contains.'''
    primes = [prime(i, nprimes) for i in sorted(F.primes)]
    support = frozenset()
    for p in primes:
        support |= principal_filter(p).primes
    return PrimeSubsetFilter(support)


def radical_contains(g, fs):
    '''g ∈ ∩ F(f_i), transcribed to supports.'''
    common = intersect_filters([principal_filter(f) for f in fs])
    return g.support <= common.primes


def minimal_elements(vectors):
    '''
    Componentwise-minimal elements, by projection: group the vectors by their first
    coordinate, keep the minimal tails of each group, and drop a tail when a group
    with a smaller first coordinate already kept a tail below it.
    '''
    vectors = sorted(set(tuple(v) for v in vectors))
    _same_arity(vectors)
    if not vectors:
        return []
    if len(vectors[0]) == 0:
        return [vectors[0]]
    return sorted(_minimal(vectors))


def _minimal(vectors):
    if len(vectors[0]) == 1:
        return [min(vectors)]
    groups = {}
    for v in vectors:
        groups.setdefault(v[0], []).append(v[1:])
    kept_tails = []
    out = []
    for head in sorted(groups):
        for tail in _minimal(groups[head]):
            if not any(_leq(t, tail) for t in kept_tails):
                out.append((head,) + tail)
        kept_tails.extend(t[1:] for t in out if t[0] == head)
    return out


def _leq(u, v):
    return all(a <= b for a, b in zip(u, v))


def minimal_elements_pairwise(vectors):
    vectors = sorted(set(tuple(v) for v in vectors))
    _same_arity(vectors)
    return [v for v in vectors if not any(u != v and _leq(u, v) for u in vectors)]
