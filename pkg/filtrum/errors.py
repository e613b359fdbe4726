'''
Exception hierarchy shared by every filtrum module.

Each error knows the process exit code the command line front end reports for it
and renders itself as a machine-readable diagnostic.
'''


class FiltrumError(Exception):
    exit_code = 1

    def __init__(self, message='', **fields):
        super().__init__(message or self.__class__.__name__)
        self.message = message
        self.fields = fields

    def to_dict(self):
        diagnostic = {'error': self.__class__.__name__}
        if self.message:
            diagnostic['message'] = self.message
        for key in sorted(self.fields):
            diagnostic[key] = self.fields[key]
        return diagnostic

    def __getattr__(self, name):
        fields = self.__dict__.get('fields', {})
        if name in fields:
            return fields[name]
        raise AttributeError(name)


class ValidationError(FiltrumError):
    exit_code = 1


class ShapeError(ValidationError):
    pass


class NonAssociative(ValidationError):
    pass


class NonCommutative(ValidationError):
    pass


class NonDistributive(ValidationError):
    pass


class BadIdentity(ValidationError):
    pass


class BadZero(ValidationError):
    pass


class BadNegation(ValidationError):
    pass


class IndexOutOfRange(ValidationError):
    pass


class NoZeroElement(ValidationError):
    pass


class ZeroEqualsOne(ValidationError):
    pass


class ZeroRing(ValidationError):
    pass


class NotAFilter(ValidationError):
    pass


class NotAHom(ValidationError):
    pass


class NotMultiplicativelyClosed(ValidationError):
    pass


class NotPseudoideal(ValidationError):
    pass


class NotDisjoint(ValidationError):
    pass


class NotAnIdeal(ValidationError):
    pass


class NotBoolean(ValidationError):
    pass


class CarrierMismatch(ValidationError):
    pass


class TypeMismatch(ValidationError):
    pass


class NotClosedUnderOps(ValidationError):
    pass


class NotContinuous(ValidationError):
    pass


class ArityMismatch(ValidationError):
    pass


class EmptyList(ValidationError):
    pass


class ZeroElement(ValidationError):
    pass


class BadBound(ValidationError):
    pass


class DivisionByZero(ValidationError, ZeroDivisionError):
    pass


class DocumentError(ValidationError):
    pass


class LawViolation(FiltrumError):
    exit_code = 2

    def __init__(self, law, counterexample=None, message=''):
        super().__init__(message or 'law {0} violated'.format(law), law=law,
                         counterexample=counterexample)


class CapExceeded(FiltrumError):
    exit_code = 3

    def __init__(self, what, size, cap):
        super().__init__('{0} of size {1} exceeds cap {2}'.format(what, size, cap),
                         what=what, size=size, cap=cap)


class SizeOverflow(CapExceeded):
    pass
