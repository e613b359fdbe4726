'''
Exact arithmetic in Z[√-5] and bounded membership certificates for principal
filters there. Membership is only ever confirmed with a witness; a search that
finds nothing reports the bound it gave up at.
'''

from typing import Union

import attr

from filtrum.errors import BadBound, DivisionByZero, ZeroElement

D = -5


@attr.s(frozen=True, auto_attribs=True)
class QuadInt:
    '''a + b√-5.'''
    a: int
    b: int = 0

    def __add__(self, other):
        other = _coerce(other)
        return QuadInt(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadInt(-self.a, -self.b)

    def __sub__(self, other):
        return self + -_coerce(other)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        return QuadInt(self.a * other.a + D * self.b * other.b, self.a * other.b + self.b * other.a)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = QuadInt(1)
        for _ in range(n):
            result = result * self
        return result

    def __bool__(self):
        return bool(self.a or self.b)

    def __str__(self):
        if not self.b:
            return str(self.a)
        root = '√-5' if abs(self.b) == 1 else '{0}√-5'.format(abs(self.b))
        if not self.a:
            return ('-' if self.b < 0 else '') + root
        return '{0}{1}{2}'.format(self.a, '-' if self.b < 0 else '+', root)

    def conj(self):
        return QuadInt(self.a, -self.b)

    def norm(self):
        return self.a * self.a - D * self.b * self.b

    def is_unit(self):
        return self.norm() == 1


def _coerce(x):
    return x if isinstance(x, QuadInt) else QuadInt(x)


def mul(x, y):
    return _coerce(x) * _coerce(y)


def add(x, y):
    return _coerce(x) + _coerce(y)


def norm(x):
    return _coerce(x).norm()


def divide(f, g):
    '''The exact quotient f / g, or None when g does not divide f.'''
    f, g = _coerce(f), _coerce(g)
    if not g:
        raise DivisionByZero('division by zero')
    n = g.norm()
    numerator = f * g.conj()
    if numerator.a % n or numerator.b % n:
        return None
    return QuadInt(numerator.a // n, numerator.b // n)


def divides(g, f):
    return divide(f, g) is not None


def norm_refutes(g, f, n):
    '''True when norm(g) ∤ norm(f)^n, which rules out g | f^n.'''
    g, f = _coerce(g), _coerce(f)
    return f.norm() ** n % g.norm() != 0


@attr.s(frozen=True, auto_attribs=True)
class Member:
    n: int
    witness: QuadInt


@attr.s(frozen=True, auto_attribs=True)
class UnknownUpTo:
    bound: int


def member_bounded(g, f, bound) -> Union[Member, UnknownUpTo]:
    '''Smallest n ≤ bound with g | f^n, and the cofactor f^n / g.'''
    g, f = _coerce(g), _coerce(f)
    if not f:
        raise ZeroElement('f must be non-zero')
    if not g:
        raise ZeroElement('g must be non-zero')
    if isinstance(bound, bool) or not isinstance(bound, int) or bound < 1:
        raise BadBound('bound must be a positive integer', bound=bound)
    power = QuadInt(1)
    for n in range(1, bound + 1):
        power = power * f
        witness = divide(power, g)
        if witness is not None:
            return Member(n, witness)
    return UnknownUpTo(bound)
