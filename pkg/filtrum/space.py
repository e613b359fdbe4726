'''
Finite topological spaces with an explicit open family, continuous maps between
them, and the point-set predicates the filter theory checks.

Point sets and opens are int bitsets over point indices.
'''

import logging
from functools import cached_property
from typing import Tuple

import attr
import networkx as nx

from filtrum import config
from filtrum.certificate import Certificate
from filtrum.errors import CapExceeded, NotClosedUnderOps, NotContinuous, ShapeError
from filtrum.monoid import bits, is_subset, members, popcount

log = logging.getLogger(__name__)


@attr.s(frozen=True, auto_attribs=True)
class FiniteSpace:
    points: Tuple[str, ...]
    opens: Tuple[int, ...]

    @property
    def size(self):
        return len(self.points)

    @cached_property
    def full(self):
        return (1 << len(self.points)) - 1

    @cached_property
    def open_index(self):
        return {U: i for i, U in enumerate(self.opens)}

    def is_open(self, mask):
        return mask in self.open_index

    def is_closed(self, mask):
        return (self.full & ~mask) in self.open_index

    @cached_property
    def closed_sets(self):
        return tuple(sorted(self.full & ~U for U in self.opens))

    @cached_property
    def minimal_neighborhoods(self):
        out = []
        for x in range(self.size):
            U = self.full
            for V in self.opens:
                if V >> x & 1:
                    U &= V
            out.append(U)
        return tuple(out)

    def label(self, mask):
        return '{' + ','.join(self.points[i] for i in members(mask)) + '}'


def make_space(points, opens):
    '''Validates a point list and an open family given as index lists or bitsets.'''
    points = tuple(str(p) for p in points)
    if len(set(points)) != len(points):
        raise ShapeError('point names must be distinct')
    full = (1 << len(points)) - 1
    family = set()
    for U in opens:
        mask = U if isinstance(U, int) else bits(_checked_indices(U, len(points)))
        if mask & ~full:
            raise ShapeError('open set refers to unknown points')
        family.add(mask)
    for required in (0, full):
        if required not in family:
            raise NotClosedUnderOps('open family must contain the empty set and the whole space',
                                    missing=members(required))
    ordered = sorted(family)
    for i, U in enumerate(ordered):
        for V in ordered[i + 1:]:
            for result, op in ((U | V, 'union'), (U & V, 'intersection')):
                if result not in family:
                    raise NotClosedUnderOps('open family not closed under {0}'.format(op),
                                            left=members(U), right=members(V))
    return FiniteSpace(points=points, opens=tuple(ordered))


def _checked_indices(indices, n):
    for i in indices:
        if isinstance(i, bool) or not isinstance(i, int) or not 0 <= i < n:
            raise ShapeError('point index {0} out of range'.format(i), size=n)
    return indices


def closure(X, mask):
    '''Smallest closed set containing mask.'''
    out = X.full
    for C in X.closed_sets:
        if is_subset(mask, C):
            out &= C
    return out


def interior(X, mask):
    out = 0
    for U in X.opens:
        if is_subset(U, mask):
            out |= U
    return out


def is_dense(X, mask, within=None):
    within = X.full if within is None else within
    return is_subset(within, closure(X, mask))


def minimal_neighborhood(X, x):
    '''U(x): the smallest open containing x.'''
    return X.minimal_neighborhoods[x]


def specialization_order(X):
    '''Pairs (x, y) with x ⪯ y, i.e. every open containing x contains y.'''
    return [(x, y) for x in range(X.size) for y in range(X.size)
            if minimal_neighborhood(X, x) >> y & 1]


def specialization_graph(X):
    graph = nx.DiGraph()
    graph.add_nodes_from(range(X.size))
    graph.add_edges_from((x, y) for x, y in specialization_order(X) if x != y)
    return graph


def is_t0(X):
    return len(set(X.minimal_neighborhoods)) == X.size


def is_connected(X):
    clopen = [U for U in X.opens if X.is_closed(U) and U not in (0, X.full)]
    return X.size > 0 and not clopen


def is_quasicompact(X, cover=None):
    '''
    Every open cover has a finite subcover.

    Open families of a finite space are finite, so any cover is its own finite
    subcover; the check only confirms that the given cover covers.
    '''
    cover = X.opens if cover is None else cover
    union = 0
    for U in cover:
        union |= U
    return union == X.full


def is_hausdorff(X):
    for x in range(X.size):
        for y in range(x + 1, X.size):
            if not any(U >> x & 1 and V >> y & 1 and not U & V for U in X.opens for V in X.opens):
                return False
    return True


def is_totally_disconnected(X):
    '''Connected components are singletons.'''
    for x in range(X.size):
        component = X.full
        for U in X.opens:
            if X.is_closed(U):
                component &= U if U >> x & 1 else X.full & ~U
        if popcount(component) > 1:
            return False
    return True


def has_clopen_basis(X):
    clopen = [U for U in X.opens if X.is_closed(U)]
    for U in X.opens:
        union = 0
        for V in clopen:
            if is_subset(V, U):
                union |= V
        if union != U:
            return False
    return True


def subspace(X, mask):
    '''Subspace topology on mask; returns (space, tuple of original point indices).'''
    index = members(mask)
    position = {p: i for i, p in enumerate(index)}
    opens = set()
    for U in X.opens:
        opens.add(bits(position[p] for p in members(U & mask)))
    return FiniteSpace(points=tuple(X.points[p] for p in index), opens=tuple(sorted(opens))), tuple(index)


def product_space(X, Y, cap=None):
    '''Product topology; point (i, j) has index i·|Y| + j.'''
    cap = config.current().max_opens if cap is None else cap
    n = Y.size
    points = tuple('({0},{1})'.format(a, b) for a in X.points for b in Y.points)
    rectangles = set()
    for U in X.opens:
        for V in Y.opens:
            rectangles.add(bits(i * n + j for i in members(U) for j in members(V)))
    opens = {0}
    for R in sorted(rectangles):
        opens |= {O | R for O in opens}
        if len(opens) > cap:
            raise CapExceeded('product open family', len(opens), cap)
    return FiniteSpace(points=points, opens=tuple(sorted(opens)))


def image(mapping, mask):
    out = 0
    for x in members(mask):
        out |= 1 << mapping[x]
    return out


def preimage(mapping, mask):
    return bits(x for x, y in enumerate(mapping) if mask >> y & 1)


def check_homeomorphism(X, Y, mapping, claim='space.homeomorphism'):
    '''Certificate that mapping (point index of X → point index of Y) is a homeomorphism.'''
    mapping = tuple(mapping)
    pairs = tuple(enumerate(mapping))
    if len(mapping) != X.size or sorted(mapping) != list(range(Y.size)):
        return Certificate(claim, False, pairs, {'reason': 'not a bijection'})
    for V in Y.opens:
        if not X.is_open(preimage(mapping, V)):
            return Certificate(claim, False, pairs, {'reason': 'not continuous', 'open': members(V)})
    for U in X.opens:
        if not Y.is_open(image(mapping, U)):
            return Certificate(claim, False, pairs, {'reason': 'not open', 'open': members(U)})
    return Certificate(claim, True, pairs)


def find_homeomorphism(X, Y):
    '''Backtracking search for a homeomorphism X → Y; None when the spaces differ.'''
    if X.size != Y.size or len(X.opens) != len(Y.opens):
        return None
    sig_x = [popcount(U) for U in X.minimal_neighborhoods]
    sig_y = [popcount(U) for U in Y.minimal_neighborhoods]
    if sorted(sig_x) != sorted(sig_y):
        return None
    n = X.size
    assignment = [None] * n
    used = [False] * n

    def search(x):
        if x == n:
            return check_homeomorphism(X, Y, assignment).holds
        for y in range(n):
            if used[y] or sig_y[y] != sig_x[x]:
                continue
            ok = all(
                (X.minimal_neighborhoods[x] >> z & 1) == (Y.minimal_neighborhoods[y] >> assignment[z] & 1)
                and (X.minimal_neighborhoods[z] >> x & 1) == (Y.minimal_neighborhoods[assignment[z]] >> y & 1)
                for z in range(x))
            if not ok:
                continue
            assignment[x], used[y] = y, True
            if search(x + 1):
                return True
            assignment[x], used[y] = None, False
        return False

    return tuple(assignment) if search(0) else None


@attr.s(frozen=True, auto_attribs=True)
class ContinuousMap:
    source: FiniteSpace
    target: FiniteSpace
    map: Tuple[int, ...]

    def __call__(self, x):
        return self.map[x]

    def image(self, mask):
        return image(self.map, mask)

    def preimage(self, mask):
        return preimage(self.map, mask)

    @cached_property
    def is_injective(self):
        return len(set(self.map)) == len(self.map)

    @cached_property
    def is_surjective(self):
        return len(set(self.map)) == self.target.size

    @cached_property
    def is_closed_map(self):
        return all(self.target.is_closed(self.image(C)) for C in self.source.closed_sets)


def validate_map(source, target, raw_map):
    if not isinstance(raw_map, (list, tuple)) or len(raw_map) != source.size:
        raise ShapeError('map must list one target point per source point', size=source.size)
    for y in raw_map:
        if isinstance(y, bool) or not isinstance(y, int) or not 0 <= y < target.size:
            raise ShapeError('map entry {0} out of range'.format(y), size=target.size)
    for V in target.opens:
        if not source.is_open(preimage(raw_map, V)):
            raise NotContinuous('preimage of an open set is not open', open=members(V))
    return ContinuousMap(source=source, target=target, map=tuple(raw_map))


def inclusion(X, mask):
    '''The subspace on mask together with its inclusion map into X.'''
    sub, index = subspace(X, mask)
    return ContinuousMap(source=sub, target=X, map=index)


def quotient_map(X, classes, names=None):
    '''
    Quotient of X by a partition given as a list of point-index lists.

    A set is open in the quotient iff its preimage is open in X.
    '''
    cls = [None] * X.size
    for k, block in enumerate(classes):
        for p in _checked_indices(block, X.size):
            cls[p] = k
    if any(c is None for c in cls):
        raise ShapeError('partition does not cover every point')
    k = len(classes)
    names = names or ['[' + ','.join(X.points[p] for p in block) + ']' for block in classes]
    opens = [m for m in range(1 << k) if X.is_open(preimage(cls, m))]
    Q = FiniteSpace(points=tuple(names), opens=tuple(opens))
    return ContinuousMap(source=X, target=Q, map=tuple(cls))


def sierpinski():
    '''Points a (open) and b (closed).'''
    return make_space(['a', 'b'], [[], [0], [0, 1]])


def discrete(n, prefix='x'):
    return FiniteSpace(points=tuple('{0}{1}'.format(prefix, i) for i in range(n)),
                       opens=tuple(range(1 << n)))


def indiscrete(n, prefix='x'):
    return FiniteSpace(points=tuple('{0}{1}'.format(prefix, i) for i in range(n)),
                       opens=tuple(sorted({0, (1 << n) - 1})))


def chain(n, prefix='c'):
    '''Opens are the initial segments {c0..ck}.'''
    return FiniteSpace(points=tuple('{0}{1}'.format(prefix, i) for i in range(n)),
                       opens=tuple((1 << k) - 1 for k in range(n + 1)))


def one_point():
    return discrete(1, prefix='p')
