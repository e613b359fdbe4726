'''
Decides whether a finite space is (homeomorphic to) the filtrum of a monoid, and
if so reconstructs the monoid of local opens and the homeomorphism.
'''

import logging
from typing import Any, Tuple

import attr
from more_itertools import powerset

from filtrum import config
from filtrum.certificate import Certificate
from filtrum.filt import build_filtrum, filtrum_space
from filtrum.monoid import FiniteMonoid, bits, is_subset, members
from filtrum.space import check_homeomorphism

log = logging.getLogger(__name__)


@attr.s(frozen=True, auto_attribs=True)
class Success:
    local_opens: Tuple[int, ...]
    monoid: FiniteMonoid
    psi: Tuple[int, ...]
    certificate: Certificate

    def __bool__(self):
        return True


@attr.s(frozen=True, auto_attribs=True)
class Failure:
    condition: int
    witness: Any = None

    def __bool__(self):
        return False


def local_opens(X):
    '''Opens U with a point x ∈ U such that U lies in every open around x.'''
    return tuple(sorted(set(X.minimal_neighborhoods)))


def _families(D, cap):
    if len(D) <= cap:
        return [list(family) for family in powerset(D)]
    # intersections repeat; their closure is enough
    closure = {None}
    for U in D:
        closure |= {U if I is None else I & U for I in closure}
    return [[I] if I is not None else [] for I in sorted(closure, key=lambda m: -1 if m is None else m)]


def _intersection(X, family):
    out = X.full
    for U in family:
        out &= U
    return out


def _finite_refinement(X, family, V):
    '''Some prefix of family has its intersection inside V.'''
    out = X.full
    for U in family:
        if is_subset(out, V):
            return True
        out &= U
    return is_subset(out, V)


def characterize_filtrum_space(X, cap=None):
    cap = config.current().max_subfamily_scan if cap is None else cap
    mn = X.minimal_neighborhoods

    for x in range(X.size):
        for y in range(x + 1, X.size):
            if mn[x] == mn[y]:
                return Failure(1, {'points': [X.points[x], X.points[y]]})

    D = local_opens(X)
    if X.full not in D:
        return Failure(2, {'local_opens': [members(U) for U in D]})

    for U in D:
        for V in D:
            if U & V not in D:
                return Failure(3, {'left': members(U), 'right': members(V)})

    for U in X.opens:
        union = 0
        for V in D:
            if is_subset(V, U):
                union |= V
        if union != U:
            return Failure(4, {'open': members(U)})

    families = _families(D, cap)
    for family in families:
        meet = _intersection(X, family)
        if not any(meet >> z & 1 and is_subset(meet, mn[z]) for z in range(X.size)):
            return Failure(5, {'intersection': members(meet)})

    for family in families:
        meet = _intersection(X, family)
        for V in D:
            if is_subset(meet, V) and not _finite_refinement(X, family, V):
                return Failure(6, {'intersection': members(meet), 'target': members(V)})

    index = {U: i for i, U in enumerate(D)}
    table = tuple(tuple(index[U & V] for V in D) for U in D)
    monoid = FiniteMonoid(size=len(D), mul=table, one=index[X.full], zero=index[_intersection(X, D)],
                          name='local-opens')
    Phi = build_filtrum(monoid)
    psi = tuple(Phi.point(bits(i for i, U in enumerate(D) if U >> x & 1)) for x in range(X.size))
    certificate = check_homeomorphism(X, filtrum_space(Phi), psi, claim='characterize.homeomorphism')
    log.debug("space with %d points characterized by %d local opens", X.size, len(D))
    return Success(local_opens=D, monoid=monoid, psi=psi, certificate=certificate)
