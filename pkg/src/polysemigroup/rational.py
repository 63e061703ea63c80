"""Rational functions A/B in lowest terms with a monic denominator."""

from __future__ import annotations

from .errors import DivisionByZero, FieldMismatch
from .field import FieldElement, FieldSpec
from .poly import Polynomial, X


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


class RationalFunction:
    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial | None = None):
        field = num.field
        if den is None:
            den = Polynomial.constant(field, 1)
        if den.field != field:
            raise FieldMismatch(f"{field} vs {den.field}")
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
        inv = den.lead.inverse()
        object.__setattr__(self, "num", num.scale(inv))
        object.__setattr__(self, "den", den.scale(inv))

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def from_poly(cls, P: Polynomial) -> RationalFunction:
        return cls(P)

    @property
    def field(self) -> FieldSpec:
        return self.num.field

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def as_polynomial(self) -> Polynomial:
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a polynomial")
        return self.num

    @property
    def degree(self) -> int:
        """Degree as a map of the projective line, max(deg A, deg B)."""
        return max(self.num.degree, self.den.degree)

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Polynomial):
            return RationalFunction(other)
        return RationalFunction(Polynomial.constant(self.field, other))

    def __add__(self, other):
        o = self._coerce(other)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return RationalFunction(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __mul__(self, other):
        o = self._coerce(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o.num.is_zero():
            raise DivisionByZero("division by the zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, e: int):
        if e >= 0:
            return RationalFunction(self.num**e, self.den**e)
        if self.num.is_zero():
            raise DivisionByZero("negative power of zero")
        return RationalFunction(self.den ** (-e), self.num ** (-e))

    def __eq__(self, other):
        if isinstance(other, (RationalFunction, Polynomial)):
            o = self._coerce(other)
            return self.num == o.num and self.den == o.den
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def compose(self, other) -> RationalFunction:
        """self o other."""
        o = self._coerce(other)
        P, Q = o.num, o.den

        def homog(A: Polynomial, d: int) -> Polynomial:
            # Q^d * A(P/Q)
            acc = Polynomial.constant(self.field, 0)
            for e, c in A.terms():
                acc = acc + (P**e * Q ** (d - e)).scale(c)
            return acc

        dA, dB = self.num.degree, self.den.degree
        top = homog(self.num, dA)
        bot = homog(self.den, dB)
        if dA >= dB:
            bot = bot * Q ** (dA - dB)
        else:
            top = top * Q ** (dB - dA)
        return RationalFunction(top, bot)

    def __call__(self, x):
        if isinstance(x, (RationalFunction, Polynomial)):
            return self.compose(x)
        return self.evaluate(x)

    def evaluate(self, x) -> FieldElement:
        d = self.den.evaluate(x)
        if d.is_zero():
            raise DivisionByZero(f"pole at {x}")
        return self.num.evaluate(x) / d

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        num = str(self.num)
        if len(self.num.terms()) > 1:
            num = f"({num})"
        den = str(self.den)
        if len(self.den.terms()) > 1 or self.den.degree > 0 and "^" in den or "*" in den:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"RationalFunction({self.field}, {self})"


def iterate_rational(F: RationalFunction, r: int) -> RationalFunction:
    result = RationalFunction(X(F.field))
    for _ in range(r):
        result = F.compose(result)
    return result
