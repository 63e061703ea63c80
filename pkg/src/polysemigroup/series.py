"""Truncated power series in X*K[[X]].

A series carries a precision N: its coefficients are known for degrees
0..N.  When ``exact`` is set every coefficient above N is known to be zero,
so the series is really a polynomial and precision can be raised for free.
Composition reports the largest precision it can justify.
"""

from __future__ import annotations

import math

from .errors import (
    BadRootChoice,
    CharDividesM,
    DegreeConditionViolated,
    FieldMismatch,
    InnerSeriesHasConstantTerm,
    NoSolution,
    NonzeroConstantTerm,
    NotAFixedPoint,
    NotDegreeOne,
    RamificationOne,
    ZeroSeries,
    DivisionByZero,
)
from .field import FieldElement, FieldSpec, join_terms
from .poly import Polynomial
from .rational import RationalFunction

DEFAULT_PRECISION = 32
INFINITY = math.inf


class TruncatedSeries:
    __slots__ = ("field", "precision", "exact", "_c")

    def __init__(self, field: FieldSpec, coeffs, precision: int | None = None, exact: bool = False):
        """``coeffs[i]`` is the coefficient of X^i; ``coeffs[0]`` must be 0."""
        reps = [field(c).rep for c in coeffs]
        if precision is None:
            precision = len(reps) - 1
        if precision < 0:
            raise ValueError("precision must be >= 0")
        if exact:
            if any(not field._is_zero(c) for c in reps[precision + 1:]):
                precision = max(i for i, c in enumerate(reps) if not field._is_zero(c))
        reps = reps[: precision + 1] + [field._zero] * (precision + 1 - len(reps))
        if reps and not field._is_zero(reps[0]):
            raise NonzeroConstantTerm("series must have zero constant term")
        self._set(field, reps, precision, exact)

    def _set(self, field, reps, precision, exact):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "_c", reps)
        object.__setattr__(self, "precision", precision)
        object.__setattr__(self, "exact", exact)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def _raw(cls, field, reps, precision, exact=False):
        s = cls.__new__(cls)
        s._set(field, reps, precision, exact)
        return s

    @classmethod
    def from_polynomial(cls, P: Polynomial, precision: int = DEFAULT_PRECISION) -> TruncatedSeries:
        """The polynomial as an exactly known series."""
        if not P.coeff(0).is_zero():
            raise NonzeroConstantTerm(f"{P} has a nonzero constant term")
        N = max(precision, P.degree)
        reps = [P.coeff(i).rep for i in range(N + 1)]
        return cls._raw(P.field, reps, N, exact=True)._with_display(precision)

    def _with_display(self, precision):
        # exact series keep all their terms; precision only sets how much is shown
        if not self.exact or precision >= self.precision:
            return self
        top = self.degree_bound()
        N = max(precision, top)
        return TruncatedSeries._raw(self.field, self._c[: N + 1], N, True)

    @classmethod
    def x(cls, field: FieldSpec, precision: int = DEFAULT_PRECISION) -> TruncatedSeries:
        return cls.from_polynomial(Polynomial.x(field), precision)

    @classmethod
    def monomial(cls, field, c, k, precision=DEFAULT_PRECISION) -> TruncatedSeries:
        return cls.from_polynomial(Polynomial.monomial(field, c, k), precision)

    # --- inspection -----------------------------------------------------
    def coeff(self, i: int) -> FieldElement:
        if i > self.precision:
            if self.exact:
                return self.field.zero
            raise ValueError(f"coefficient of X^{i} is beyond precision {self.precision}")
        return FieldElement(self.field, self._c[i])

    @property
    def coeffs(self) -> list[FieldElement]:
        return [FieldElement(self.field, c) for c in self._c]

    def degree_bound(self) -> int:
        nz = [i for i, c in enumerate(self._c) if not self.field._is_zero(c)]
        return nz[-1] if nz else 0

    def is_zero(self) -> bool:
        return all(self.field._is_zero(c) for c in self._c)

    @property
    def lowest_degree(self) -> int | None:
        for i, c in enumerate(self._c):
            if not self.field._is_zero(c):
                return i
        return None

    @property
    def lowest_coeff(self) -> FieldElement:
        d = self.lowest_degree
        if d is None:
            raise ZeroSeries("series is zero to precision")
        return self.coeff(d)

    def visible_terms(self) -> list[int]:
        return [i for i, c in enumerate(self._c) if not self.field._is_zero(c)]

    def to_polynomial(self) -> Polynomial:
        return Polynomial.from_terms(self.field, {i: FieldElement(self.field, c)
                                                  for i, c in enumerate(self._c)})

    def truncate(self, N: int) -> TruncatedSeries:
        """Forget everything above X^N (the result is no longer exact unless it was and nothing was cut)."""
        if N >= self.precision:
            if self.exact:
                return TruncatedSeries._raw(self.field, self._c + [self.field._zero] * (N - self.precision), N, True)
            return self
        cut = self._c[: N + 1]
        exact = self.exact and all(self.field._is_zero(c) for c in self._c[N + 1:])
        return TruncatedSeries._raw(self.field, cut, N, exact)

    def congruent(self, other: TruncatedSeries, N: int | None = None) -> bool:
        """Equal modulo X^(N+1); N defaults to the smaller precision."""
        if N is None:
            N = min(self.precision, other.precision)
        return all(self.coeff(i) == other.coeff(i) for i in range(N + 1))

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.field == other.field and self.precision == other.precision
                and self.exact == other.exact and self._c == other._c)

    def __hash__(self):
        return hash((self.field, self.precision, self.exact, tuple(self._c)))

    # --- arithmetic -----------------------------------------------------
    def _check(self, other):
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def _binary(self, other, op):
        self._check(other)
        if self.exact and other.exact:
            N = max(self.precision, other.precision)
        elif self.exact:
            N = other.precision
        elif other.exact:
            N = self.precision
        else:
            N = min(self.precision, other.precision)
        a, b = self.truncate(N), other.truncate(N)
        return TruncatedSeries._raw(self.field, [op(x, y) for x, y in zip(a._c, b._c)], N,
                                    self.exact and other.exact)

    def __add__(self, other):
        return self._binary(other, self.field._add)

    def __sub__(self, other):
        return self._binary(other, self.field._sub)

    def __neg__(self):
        return TruncatedSeries._raw(self.field, [self.field._neg(c) for c in self._c], self.precision, self.exact)

    def scale(self, c) -> TruncatedSeries:
        rep = self.field(c).rep
        return TruncatedSeries._raw(self.field, [self.field._mul(rep, x) for x in self._c],
                                    self.precision, self.exact)

    def __str__(self):
        parts = []
        for i, c in enumerate(self._c):
            if self.field._is_zero(c):
                continue
            parts.append(str(Polynomial._raw(self.field, {i: c})))
        body = join_terms(parts) if parts else "0"
        if self.exact:
            return body
        return f"{body} + O(X^{self.precision + 1})"

    def __repr__(self):
        return f"TruncatedSeries({self.field}, {self})"

    def to_json(self) -> dict:
        return {"field": str(self.field), "precision": self.precision, "exact": self.exact,
                "coeffs": [str(c) for c in self.coeffs]}


# ---------------------------------------------------------------------------
# dense truncated helpers on rep lists


def _mul_trunc(field, a, b, N):
    out = [field._zero] * (N + 1)
    add, mul, is_zero = field._add, field._mul, field._is_zero
    for i, x in enumerate(a[: N + 1]):
        if is_zero(x):
            continue
        for j in range(0, min(len(b), N + 1 - i)):
            y = b[j]
            if not is_zero(y):
                out[i + j] = add(out[i + j], mul(x, y))
    return out


def _div_trunc(field, a, b, N):
    """a / b as a power series to X^N; b[0] must be nonzero."""
    if field._is_zero(b[0]):
        raise DivisionByZero("series divisor has zero constant term")
    inv = field._inv(b[0])
    out = []
    for n in range(N + 1):
        acc = a[n] if n < len(a) else field._zero
        for k in range(1, min(n, len(b) - 1) + 1):
            acc = field._sub(acc, field._mul(b[k], out[n - k]))
        out.append(field._mul(acc, inv))
    return out


# ---------------------------------------------------------------------------
# operations


def s_compose(F: TruncatedSeries, G: TruncatedSeries) -> TruncatedSeries:
    """F o G with the largest precision the inputs justify."""
    F._check(G)
    field = F.field
    g = G.lowest_degree
    if not field._is_zero(G._c[0]):
        raise InnerSeriesHasConstantTerm("inner series has a constant term")
    if g is None:
        if G.exact:
            return TruncatedSeries._raw(field, [field._zero] * (F.precision + 1), F.precision, F.exact)
        raise InnerSeriesHasConstantTerm("inner series is zero to precision; composition undetermined")
    f = F.lowest_degree
    if F.exact and G.exact:
        N = max(F.degree_bound() * G.degree_bound(), F.precision, G.precision)
        exact = True
    else:
        bound_f = INFINITY if F.exact else g * (F.precision + 1) - 1
        bound_g = INFINITY if G.exact else G.precision + g * ((f if f is not None else F.precision + 1) - 1)
        N = int(min(bound_f, bound_g, max(F.precision, G.precision)))
        exact = False
    out = [field._zero] * (N + 1)
    power = [field._one] + [field._zero] * N
    Gc = G._c
    top = min(F.precision, N // g) if not F.exact else min(F.degree_bound(), N // g)
    for k in range(1, top + 1):
        power = _mul_trunc(field, power, Gc, N)
        c = F._c[k] if k <= F.precision else field._zero
        if field._is_zero(c):
            continue
        for i in range(N + 1):
            if not field._is_zero(power[i]):
                out[i] = field._add(out[i], field._mul(c, power[i]))
    return TruncatedSeries._raw(field, out, N, exact)


def s_invert(L: TruncatedSeries) -> TruncatedSeries:
    """The compositional inverse M with L o M = M o L = X to L's precision."""
    field = L.field
    if L.lowest_degree != 1:
        raise NotDegreeOne("series must have a nonzero linear term")
    N = L.precision
    mu = [field._zero, field._inv(L._c[1])]
    # D[off][j] holds the coefficient of X^(j+off) in M^j
    D = [[None, mu[1]]]
    for j in range(2, N + 1):
        D[0].append(field._mul(D[0][-1], mu[1]))
    ell = L._c
    for n in range(2, N + 1):
        off = n - 1
        # [M^j]_n for j >= 2 only involves mu_1..mu_{n-1}
        total = field._zero
        for j in range(2, n + 1):
            if not field._is_zero(ell[j]):
                total = field._add(total, field._mul(ell[j], D[n - j][j]))
        mu_n = field._neg(field._mul(total, mu[1]))
        mu.append(mu_n)
        row = [None, mu_n]
        for j in range(2, N + 1 - off):
            acc = field._zero
            for o in range(0, off + 1):
                b = mu[off - o + 1]
                if not field._is_zero(b):
                    prev = row[j - 1] if o == off else D[o][j - 1]
                    acc = field._add(acc, field._mul(prev, b))
            row.append(acc)
        D.append(row)
    return TruncatedSeries._raw(field, mu[: N + 1], N, False)


def boettcher(F: TruncatedSeries, root_choice: FieldElement, precision: int | None = None,
              check_char: bool = True) -> TruncatedSeries:
    """The series L with L'(0) = root_choice and F o L = L o X^m.

    F must have lowest degree m >= 2 and root_choice^(m-1) must equal
    1/alpha_m.  For an exactly known F the recursion runs to ``precision``
    (default F.precision); for a truncated F the result is determined only
    up to X^(N-m+1).
    """
    field = F.field
    m = F.lowest_degree
    if m is None or m < 2:
        raise ValueError("F must have lowest degree m >= 2")
    p = field.characteristic
    if check_char and p and m % p == 0:
        raise CharDividesM(f"characteristic {p} divides m = {m}")
    root = field(root_choice)
    alpha = F.coeff(m)
    if root.is_zero() or root ** (m - 1) != alpha.inverse():
        raise BadRootChoice(f"({root})^{m - 1} != 1/({alpha})")
    if F.exact:
        NL = F.precision if precision is None else precision
    else:
        NL = F.precision - m + 1
        if precision is not None:
            NL = min(NL, precision)
    top = NL + m - 1  # highest degree of the equations F o L = L o X^m we use
    a = [F.coeff(i).rep for i in range(top + 1)]
    beta = [field._zero, root.rep]
    mul, add, is_zero = field._mul, field._add, field._is_zero
    # D[off][j] = coefficient of X^(j+off) in L^j, for j + off <= top
    D = [[None] + [field._pow(root.rep, j) for j in range(1, top + 1)]]
    m_rep = field._from_int(m)
    lead = mul(m_rep, field._mul(alpha.rep, field._pow(root.rep, m - 1)))  # = m in-field

    def diagonal(off, upto=None):
        row = [None, beta[off + 1]]
        for j in range(2, (top - off if upto is None else upto) + 1):
            acc = field._zero
            for o in range(0, off + 1):
                b = beta[off - o + 1]
                if not is_zero(b):
                    prev = row[j - 1] if o == off else D[o][j - 1]
                    acc = add(acc, mul(prev, b))
            row.append(acc)
        return row

    for r in range(1, NL):
        n = m + r
        beta.append(field._zero)  # placeholder for beta_{r+1}
        row = diagonal(r, upto=m)  # only row[m] is read below
        lhs = field._zero
        for j in range(m, n + 1):
            if is_zero(a[j]):
                continue
            val = row[j] if n - j == r else D[n - j][j]
            lhs = add(lhs, mul(a[j], val))
        rhs = beta[n // m] if n % m == 0 else field._zero
        resid = field._sub(rhs, lhs)
        if is_zero(lead):
            if not is_zero(resid):
                raise NoSolution(f"coefficient of X^{n} cannot be matched (forces a nonzero value to vanish)")
            b = field._zero
        else:
            b = mul(resid, field._inv(lead))
        beta[r + 1] = b
        D.append(diagonal(r))
    return TruncatedSeries._raw(field, beta[: NL + 1], NL, False)


def gap_stat(H: TruncatedSeries):
    """Difference of the two lowest visible degrees, or infinity with only one term."""
    terms = H.visible_terms()
    if not terms:
        raise ZeroSeries("gap statistic of the zero series")
    if len(terms) == 1:
        return INFINITY
    return terms[1] - terms[0]


def gap_stat_is_certain(H: TruncatedSeries) -> bool:
    """False when the answer is infinity only because the series was cut off."""
    return H.exact or len(H.visible_terms()) >= 2


def _reverse(P: Polynomial, d: int) -> list:
    return [P.coeff(d - i).rep for i in range(d + 1)]


def reciprocal_conjugate(F, precision: int = DEFAULT_PRECISION) -> TruncatedSeries:
    """Series of 1/F(1/X) at 0 for F = A/B with deg A - deg B >= 2."""
    if isinstance(F, Polynomial):
        F = RationalFunction(F)
    A, B = F.num, F.den
    m = A.degree - B.degree
    if m < 2:
        raise DegreeConditionViolated(f"deg A - deg B = {m}, need at least 2")
    field = F.field
    # 1/F(1/X) = X^m * rev(B) / rev(A)
    revA, revB = _reverse(A, A.degree), _reverse(B, B.degree)
    body = _div_trunc(field, revB, revA, precision)
    reps = [field._zero] * m + body
    reps = reps[: precision + 1]
    revA_p = Polynomial._raw(field, {i: c for i, c in enumerate(revA) if not field._is_zero(c)})
    revB_p = Polynomial._raw(field, {i: c for i, c in enumerate(revB) if not field._is_zero(c)})
    q, rem = divmod(revB_p, revA_p)
    if rem.is_zero():
        shifted = Polynomial.x(field) ** m * q
        return TruncatedSeries.from_polynomial(shifted, precision)
    return TruncatedSeries._raw(field, reps, precision, False)


def moebius_to_zero(F, beta, precision: int = DEFAULT_PRECISION) -> TruncatedSeries:
    """Expansion at 0 of F moved so the fixed point beta sits at 0.

    beta is a field element (translation X + beta) or ``INFINITY``
    (inversion 1/X).
    """
    if isinstance(F, Polynomial):
        F = RationalFunction(F)
    field = F.field
    if beta is INFINITY or beta == INFINITY or beta is None:
        m = F.num.degree - F.den.degree
        if m <= 0:
            raise NotAFixedPoint("infinity is not fixed by F")
        if m == 1:
            raise RamificationOne("F is unramified at infinity")
        S = reciprocal_conjugate(F, precision)
    else:
        beta = field(beta)
        if F.den.evaluate(beta).is_zero() or F.evaluate(beta) != beta:
            raise NotAFixedPoint(f"F({beta}) != {beta}")
        shift = Polynomial(field, [beta, 1])
        moved = F.compose(shift) - RationalFunction(Polynomial.constant(field, beta))
        num = [moved.num.coeff(i).rep for i in range(moved.num.degree + 1)]
        den = [moved.den.coeff(i).rep for i in range(moved.den.degree + 1)]
        if moved.den.degree == 0:
            S = TruncatedSeries.from_polynomial(moved.num.scale(moved.den.lead.inverse()), precision)
        else:
            S = TruncatedSeries._raw(field, _div_trunc(field, num, den, precision), precision, False)
        if S.lowest_degree is not None and S.lowest_degree < 2:
            raise RamificationOne(f"F has local degree 1 at {beta}")
    if S.lowest_degree is None:
        raise ZeroSeries("local expansion vanishes to precision")
    p = field.characteristic
    if p and S.lowest_degree % p == 0:
        from .errors import CharDividesDegree
        raise CharDividesDegree(f"characteristic {p} divides the local degree {S.lowest_degree}")
    return S
