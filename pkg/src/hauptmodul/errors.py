"""Exception hierarchy shared by every module."""


class HauptmodulError(Exception):
    """Base class for all errors raised by the package."""


class DivisionByZero(HauptmodulError, ZeroDivisionError):
    pass


class UnknownConstant(HauptmodulError, KeyError):
    pass


class SignUnresolved(HauptmodulError):
    pass


class UnknownMatrix(HauptmodulError, KeyError):
    pass


class SizeMismatch(HauptmodulError, ValueError):
    pass


class CapExceeded(HauptmodulError):
    pass


class UnknownForm(HauptmodulError, KeyError):
    pass


class DivisionByLeadingZero(HauptmodulError, ZeroDivisionError):
    pass


class EmptyTruncationWindow(HauptmodulError):
    pass


class OrderTooSmall(HauptmodulError, ValueError):
    pass


class TailBoundExceeded(HauptmodulError):
    pass


class ExactSquareMismatch(HauptmodulError):
    pass


class AmbiguousSign(HauptmodulError):
    pass


class UnknownId(HauptmodulError, KeyError):
    pass


class UnknownSeries(HauptmodulError, KeyError):
    pass
