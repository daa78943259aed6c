"""Exception hierarchy shared by all modules."""


class HahnfieldError(Exception):
    """Base class for all library errors."""


class NoRootInInterval(HahnfieldError):
    pass


class NotIsolating(HahnfieldError):
    pass


class DivisionByZero(HahnfieldError, ZeroDivisionError):
    pass


class NegativeEvenRoot(HahnfieldError):
    pass


class ZeroDenominator(HahnfieldError):
    pass


class TruncationNotSupported(HahnfieldError):
    pass


class NotPositive(HahnfieldError):
    pass


class ZeroPolynomial(HahnfieldError):
    pass


class NotInSpan(HahnfieldError):
    pass


class NotFinite(HahnfieldError):
    pass


class RamificationTooSmall(HahnfieldError):
    pass


class DegenerateAtRoot(HahnfieldError):
    pass


class NonIntegralExponent(HahnfieldError):
    pass


class UnknownPredicate(HahnfieldError):
    pass


class RankMismatch(HahnfieldError):
    pass


class ExprSyntaxError(HahnfieldError):
    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class UnsupportedExponent(ExprSyntaxError):
    pass


class UnknownVariable(ExprSyntaxError):
    pass
