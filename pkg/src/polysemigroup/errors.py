"""Exception hierarchy shared by every module of the package."""


class SemigroupError(Exception):
    """Base class for all errors raised by polysemigroup."""


class FieldMismatch(SemigroupError, TypeError):
    pass


class DivisionByZero(SemigroupError, ZeroDivisionError):
    pass


class ZeroDivisor(SemigroupError, ZeroDivisionError):
    """A nonzero element of a quotient ring turned out not to be invertible."""

    def __init__(self, element):
        super().__init__(f"{element} is a zero divisor in {element.spec}")
        self.element = element


class ZeroInput(SemigroupError, ValueError):
    pass


class CharDividesDegree(SemigroupError, ValueError):
    pass


# name used by the series code for the same condition
CharDividesM = CharDividesDegree


class ConstantInput(SemigroupError, ValueError):
    pass


class HypothesisViolation(SemigroupError, ValueError):
    pass


class InnerSeriesHasConstantTerm(SemigroupError, ValueError):
    pass


class NonzeroConstantTerm(SemigroupError, ValueError):
    pass


class NotDegreeOne(SemigroupError, ValueError):
    pass


class BadRootChoice(SemigroupError, ValueError):
    pass


class NoSolution(SemigroupError, ValueError):
    pass


class ZeroSeries(SemigroupError, ValueError):
    pass


class DegreeConditionViolated(SemigroupError, ValueError):
    pass


class NotAFixedPoint(SemigroupError, ValueError):
    pass


NotFixed = NotAFixedPoint


class RamificationOne(SemigroupError, ValueError):
    pass


class BoundTooSmall(SemigroupError, ValueError):
    pass


class DivisibilityUnsatisfied(SemigroupError, ValueError):
    pass


class ParseError(SemigroupError, ValueError):
    def __init__(self, message, position=None):
        where = "" if position is None else f" at position {position}"
        super().__init__(f"{message}{where}")
        self.position = position
