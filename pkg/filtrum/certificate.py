'''
Machine-checked certificates for bijections and homeomorphisms, plus the
order-preserving parallel map the enumeration code shares.
'''

from concurrent.futures import ThreadPoolExecutor
from typing import Any, Tuple

import attr
from more_itertools import divide

from filtrum import config
from filtrum.errors import LawViolation


@attr.s(frozen=True, auto_attribs=True)
class Certificate:
    claim: str
    holds: bool
    pairs: Tuple[Any, ...] = ()
    witness: Any = None

    def __bool__(self):
        return self.holds

    def require(self):
        if not self.holds:
            raise LawViolation(self.claim, self.witness)
        return self

    def to_dict(self):
        out = {'claim': self.claim, 'holds': self.holds, 'pairs': [list(p) for p in self.pairs]}
        if not self.holds:
            out['witness'] = self.witness
        return out


def check_bijection(claim, pairs, domain, codomain, inverse=None):
    '''
    Certifies that pairs is the graph of a bijection domain → codomain.

    When inverse is given, it must send every image back to its preimage.
    '''
    pairs = tuple(pairs)
    left = [p[0] for p in pairs]
    right = [p[1] for p in pairs]
    if sorted(left) != sorted(domain) or len(set(left)) != len(left):
        return Certificate(claim, False, pairs, {'reason': 'not total on domain'})
    if sorted(right) != sorted(codomain) or len(set(right)) != len(right):
        missing = sorted(set(codomain) - set(right))
        return Certificate(claim, False, pairs, {'reason': 'not a bijection', 'missing': missing})
    if inverse is not None:
        for a, b in pairs:
            if inverse(b) != a:
                return Certificate(claim, False, pairs, {'reason': 'inverse mismatch', 'at': b})
    return Certificate(claim, True, pairs)


def ordered_map(func, items, workers=None):
    '''map() over items with a thread pool; results keep the order of items.'''
    workers = config.current().workers if workers is None else workers
    items = list(items)
    if workers <= 1 or len(items) < 2:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, items))


def chunked_ranges(stop, workers):
    '''Splits range(stop) into at most `workers` contiguous ranges, in order.'''
    workers = max(1, min(workers, stop or 1))
    return [list(part) for part in divide(workers, range(stop))]
