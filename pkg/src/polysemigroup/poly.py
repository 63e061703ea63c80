"""Exact univariate polynomials in X over a field from :mod:`field`.

Coefficients are stored sparsely (exponent -> rep) because the relation
search composes words whose degrees run into the tens of thousands while
staying monomial or nearly so.  ``Polynomial.coeffs`` still gives the dense
low-to-high view.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

from .errors import (
    CharDividesDegree,
    ConstantInput,
    DivisionByZero,
    FieldMismatch,
    HypothesisViolation,
)
from .field import (
    ExtensionRequest,
    FieldElement,
    FieldSpec,
    join_terms,
    nth_root_or_request,
    root_of_unity_order,
)


def _clean(field, terms):
    is_zero = field._is_zero
    return {e: c for e, c in terms.items() if not is_zero(c)}


def _mul_terms(field, A, B):
    if len(A) > len(B):
        A, B = B, A
    add, mul = field._add, field._mul
    out = {}
    get = out.get
    for i, a in A.items():
        for j, b in B.items():
            k = i + j
            prev = get(k)
            out[k] = mul(a, b) if prev is None else add(prev, mul(a, b))
    return _clean(field, out)


def _add_terms(field, A, B, negate=False):
    out = dict(A)
    add = field._sub if negate else field._add
    neg = field._neg
    for e, c in B.items():
        if e in out:
            out[e] = add(out[e], c)
        else:
            out[e] = neg(c) if negate else c
    return _clean(field, out)


class Polynomial:
    """An immutable polynomial.

    ``Polynomial(field, [c0, c1, ...])`` builds c0 + c1*X + ...; entries may be
    field elements, ints or Fractions.
    """

    __slots__ = ("field", "_t", "_deg", "_hash")

    def __init__(self, field: FieldSpec, coeffs=()):
        terms = {}
        for i, c in enumerate(coeffs):
            rep = field(c).rep
            if not field._is_zero(rep):
                terms[i] = rep
        self._set(field, terms)

    def _set(self, field, terms):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "_t", terms)
        object.__setattr__(self, "_deg", max(terms) if terms else -1)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def _raw(cls, field, terms) -> Polynomial:
        p = cls.__new__(cls)
        p._set(field, terms)
        return p

    @classmethod
    def from_terms(cls, field: FieldSpec, terms) -> Polynomial:
        """Build from a mapping or iterable of (exponent, coefficient)."""
        items = terms.items() if hasattr(terms, "items") else terms
        out = {}
        for e, c in items:
            if e < 0:
                raise ValueError("negative exponent")
            rep = field(c).rep
            out[e] = field._add(out[e], rep) if e in out else rep
        return cls._raw(field, _clean(field, out))

    @classmethod
    def x(cls, field: FieldSpec) -> Polynomial:
        return cls._raw(field, {1: field._one})

    @classmethod
    def constant(cls, field: FieldSpec, c) -> Polynomial:
        rep = field(c).rep
        return cls._raw(field, {} if field._is_zero(rep) else {0: rep})

    @classmethod
    def monomial(cls, field: FieldSpec, c, k: int) -> Polynomial:
        return cls.from_terms(field, {k: c})

    # --- inspection ------------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return self._deg

    @property
    def low_degree(self) -> int:
        return min(self._t) if self._t else -1

    def coeff(self, i: int) -> FieldElement:
        return FieldElement(self.field, self._t.get(i, self.field._zero))

    @property
    def lead(self) -> FieldElement:
        if not self._t:
            raise ValueError("zero polynomial has no leading coefficient")
        return FieldElement(self.field, self._t[self._deg])

    @property
    def coeffs(self) -> list[FieldElement]:
        return [self.coeff(i) for i in range(self._deg + 1)]

    def terms(self) -> list[tuple[int, FieldElement]]:
        """Nonzero terms as (exponent, coefficient), highest first."""
        return [(e, FieldElement(self.field, self._t[e])) for e in sorted(self._t, reverse=True)]

    @property
    def support(self) -> list[int]:
        return sorted(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def is_constant(self) -> bool:
        return self._deg <= 0

    def is_monomial(self) -> bool:
        return len(self._t) == 1

    def key(self):
        """Canonical hashable form: equal polynomials have equal keys."""
        return (self.field._key(), tuple(sorted(self._t.items())))

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.field == other.field and self._t == other._t
        if isinstance(other, (int, FieldElement)):
            return self == self._coerce(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(self.key()))
        return self._hash

    def __bool__(self):
        return bool(self._t)

    def __reduce__(self):
        return (Polynomial._raw, (self.field, self._t))

    # --- arithmetic ------------------------------------------------------
    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, FieldElement) and other.spec != self.field:
            try:
                other = self.field.embed(other)
            except FieldMismatch:
                raise FieldMismatch(f"{self.field} vs {other.spec}") from None
        return Polynomial.constant(self.field, other)

    def __add__(self, other):
        o = self._coerce(other)
        return Polynomial._raw(self.field, _add_terms(self.field, self._t, o._t))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return Polynomial._raw(self.field, _add_terms(self.field, self._t, o._t, negate=True))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        neg = self.field._neg
        return Polynomial._raw(self.field, {e: neg(c) for e, c in self._t.items()})

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            o = self._coerce(other)
            return Polynomial._raw(self.field, _mul_terms(self.field, self._t, o._t))
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c) -> Polynomial:
        rep = self.field(c).rep
        mul = self.field._mul
        return Polynomial._raw(self.field, _clean(self.field, {e: mul(rep, a) for e, a in self._t.items()}))

    def __pow__(self, e: int) -> Polynomial:
        if e < 0:
            raise ValueError("negative power of a polynomial")
        field = self.field
        if len(self._t) == 1:
            (k, c), = self._t.items()
            return Polynomial._raw(field, {k * e: field._pow(c, e)})
        result = {0: field._one}
        base = self._t
        while e:
            if e & 1:
                result = _mul_terms(field, result, base)
            e >>= 1
            if e:
                base = _mul_terms(field, base, base)
        return Polynomial._raw(field, result)

    def __divmod__(self, other):
        o = self._coerce(other)
        if o.is_zero():
            raise DivisionByZero("polynomial division by zero")
        field = self.field
        inv = field._inv(o._t[o._deg])
        rem = dict(self._t)
        quo = {}
        od = o._deg
        while rem:
            d = max(rem)
            if d < od:
                break
            c = field._mul(rem[d], inv)
            quo[d - od] = c
            for e, b in o._t.items():
                k = e + d - od
                v = field._sub(rem.get(k, field._zero), field._mul(c, b))
                if field._is_zero(v):
                    rem.pop(k, None)
                else:
                    rem[k] = v
        return Polynomial._raw(field, quo), Polynomial._raw(field, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> Polynomial:
        return self.scale(self.lead.inverse())

    def derivative(self) -> Polynomial:
        field = self.field
        out = {e - 1: field._mul(field._from_int(e), c) for e, c in self._t.items() if e > 0}
        return Polynomial._raw(field, _clean(field, out))

    # --- composition and evaluation -------------------------------------
    def __call__(self, x):
        if isinstance(x, Polynomial):
            return compose(self, x)
        return self.evaluate(x)

    def evaluate(self, x) -> FieldElement:
        field = self.field
        if not isinstance(x, FieldElement):
            x = field(x)
        elif x.spec != field:
            x = field.embed(x)
        xr = x.rep
        acc = field._zero
        prev = None
        for e in sorted(self._t, reverse=True):
            if prev is not None:
                acc = field._mul(acc, field._pow(xr, prev - e))
            acc = field._add(acc, self._t[e])
            prev = e
        if prev:
            acc = field._mul(acc, field._pow(xr, prev))
        return FieldElement(field, acc)

    def change_field(self, field: FieldSpec) -> Polynomial:
        """The same polynomial with coefficients embedded in ``field``."""
        if field == self.field:
            return self
        return Polynomial._raw(field, {e: field.embed(FieldElement(self.field, c)).rep
                                       for e, c in self._t.items()})

    # --- rendering ------------------------------------------------------
    def __str__(self):
        if not self._t:
            return "0"
        parts = []
        for e in sorted(self._t, reverse=True):
            text, atomic = self.field.render(self._t[e])
            mono = "" if e == 0 else ("X" if e == 1 else f"X^{e}")
            if not mono:
                parts.append(text if atomic else f"({text})")
            elif not atomic:
                parts.append(f"({text})*{mono}")
            elif text == "1":
                parts.append(mono)
            elif text == "-1":
                parts.append(f"-{mono}")
            else:
                parts.append(f"{text}*{mono}")
        return join_terms(parts)

    def __repr__(self):
        return f"Polynomial({self.field}, {self})"


def X(field: FieldSpec) -> Polynomial:
    return Polynomial.x(field)


def compose(F: Polynomial, G: Polynomial) -> Polynomial:
    """F o G, i.e. F(G(X))."""
    if F.field != G.field:
        raise FieldMismatch(f"{F.field} vs {G.field}")
    field = F.field
    if F.is_constant():
        return F
    if G.is_constant():
        return Polynomial.constant(field, F.evaluate(G.coeff(0)))
    if G.is_monomial():
        (k, c), = G._t.items()
        pw = field._pow
        mul = field._mul
        return Polynomial._raw(field, {e * k: mul(a, pw(c, e)) for e, a in F._t.items()})
    if F.is_monomial():
        (d, a), = F._t.items()
        return (G**d).scale(FieldElement(field, a))
    # Horner over the sparse support, jumping gaps with cached powers of G
    powers = {1: G._t}
    exps = sorted(F._t, reverse=True)
    acc = {0: F._t[exps[0]]}

    def times_power(acc, gap):
        if gap not in powers:
            powers[gap] = (G**gap)._t
        return _mul_terms(field, acc, powers[gap])

    for hi, lo in zip(exps, exps[1:]):
        acc = dict(times_power(acc, hi - lo))
        c = F._t[lo]
        acc[0] = field._add(acc[0], c) if 0 in acc else c
        acc = _clean(field, acc)
    if exps[-1]:
        acc = times_power(acc, exps[-1])
    return Polynomial._raw(field, acc)


def iterate(F: Polynomial, r: int) -> Polynomial:
    """The r-th compositional iterate; iterate(F, 0) is X."""
    if r < 0:
        raise ValueError("iterate count must be nonnegative")
    result = X(F.field)
    base = F
    # composition is associative, so square-and-multiply applies
    while r:
        if r & 1:
            result = compose(result, base)
        r >>= 1
        if r:
            base = compose(base, base)
    return result


def _require_nonconstant(F):
    if F.degree < 1:
        raise ConstantInput(f"{F} is constant")


def is_gap_form(F: Polynomial) -> bool:
    _require_nonconstant(F)
    return F.coeff(F.degree - 1).is_zero()


def _char_divides(field, m):
    p = field.characteristic
    return p != 0 and m % p == 0


def gap_shift(F: Polynomial) -> tuple[FieldElement, Polynomial]:
    """The c with F(X + c) - c in gap form, and that conjugate.

    Convention: L = X + c and F is replaced by L^-1 o F o L, so
    c = -a_{m-1} / (m * a_m).
    """
    m = F.degree
    if m < 1:
        raise ConstantInput(f"{F} is constant")
    if _char_divides(F.field, m):
        raise CharDividesDegree(f"characteristic {F.field.characteristic} divides degree {m}")
    c = -F.coeff(m - 1) / (F.lead * m)
    return c, conjugate(F, LinearMap(F.field.one, c))


def lcal(F: Polynomial) -> int:
    """gcd of the differences between exponents of nonzero terms (0 for monomials)."""
    _require_nonconstant(F)
    exps = F.support
    return reduce(math.gcd, (e - exps[0] for e in exps[1:]), 0)


_cheb_cache: dict = {}


def chebyshev(m: int, field: FieldSpec) -> Polynomial:
    """Normalized T_m, the polynomial with T_m(X + 1/X) = X^m + X^-m."""
    if m < 0:
        raise ValueError("index must be nonnegative")
    key = (field._key(), m)
    if key in _cheb_cache:
        return _cheb_cache[key]
    x = X(field)
    prev, cur = Polynomial.constant(field, 2), x
    if m == 0:
        return prev
    for _ in range(m - 1):
        prev, cur = cur, x * cur - prev
    _cheb_cache[key] = cur
    return cur


def scaling_symmetry(F: Polynomial, alpha: FieldElement) -> FieldElement | None:
    """The beta with beta*F(X) = F(alpha*X), if it exists.

    It exists exactly when alpha^lcal(F) == 1, and then beta = alpha^deg F.
    """
    _require_nonconstant(F)
    if alpha.is_zero():
        raise ValueError("alpha must be nonzero")
    if not (alpha ** lcal(F)).is_one():
        return None
    return alpha**F.degree


@dataclass(frozen=True)
class LinearMap:
    """L(X) = u*X + v with u nonzero."""

    u: FieldElement
    v: FieldElement

    def __post_init__(self):
        if self.u.is_zero():
            raise ValueError("LinearMap needs u != 0")
        if self.u.spec != self.v.spec:
            raise FieldMismatch(f"{self.u.spec} vs {self.v.spec}")

    @classmethod
    def identity(cls, field: FieldSpec) -> LinearMap:
        return cls(field.one, field.zero)

    @property
    def field(self) -> FieldSpec:
        return self.u.spec

    @property
    def poly(self) -> Polynomial:
        return Polynomial(self.field, [self.v, self.u])

    def inverse(self) -> LinearMap:
        return LinearMap(self.u.inverse(), -self.v / self.u)

    def __call__(self, x):
        if isinstance(x, Polynomial):
            return compose(self.poly, x)
        return self.u * x + self.v

    def then(self, other: LinearMap) -> LinearMap:
        """other o self."""
        return LinearMap(other.u * self.u, other.u * self.v + other.v)

    def change_field(self, field: FieldSpec) -> LinearMap:
        return LinearMap(field.embed(self.u), field.embed(self.v))

    def to_json(self) -> dict:
        return {"u": str(self.u), "v": str(self.v)}

    def __str__(self):
        return str(self.poly)


def conjugate(F: Polynomial, L: LinearMap) -> Polynomial:
    """L^-1 o F o L."""
    if L.field != F.field:
        L = L.change_field(F.field)
    inner = compose(F, L.poly)
    Li = L.inverse()
    return inner.scale(Li.u) + Li.v


def levi_match(A: Polynomial, B: Polynomial, F: Polynomial, G: Polynomial) -> LinearMap:
    """The degree-one L with F = A o L^-1 and G = L o B, given A o B = F o G."""
    for P in (A, B, F, G):
        _require_nonconstant(P)
    if A.degree != F.degree:
        raise HypothesisViolation(f"deg A = {A.degree} but deg F = {F.degree}")
    if _char_divides(A.field, A.degree):
        raise CharDividesDegree(f"characteristic divides deg A = {A.degree}")
    if B.degree != G.degree:
        raise HypothesisViolation("A o B and F o G have different degrees")
    u = G.lead / B.lead
    rest = G - B.scale(u)
    if rest.degree > 0:
        raise HypothesisViolation("G - u*B is not constant")
    L = LinearMap(u, rest.coeff(0))
    if compose(F, L.poly) != A:
        raise HypothesisViolation("F o L differs from A; the inputs do not satisfy A o B = F o G")
    return L


def compositional_root(F: Polynomial, h: int, s: int):
    """All (gamma, A) with gamma * A^(s) = F, gamma torsion and A of degree h in gap form.

    Returns a list (possibly empty), or an ExtensionRequest when every
    candidate leading coefficient lives outside the working field.
    """
    if h < 2 or s < 1:
        raise ValueError("need h >= 2 and s >= 1")
    field = F.field
    if F.degree != h**s:
        raise HypothesisViolation(f"deg F = {F.degree} is not {h}^{s}")
    if _char_divides(field, h):
        raise CharDividesDegree(f"characteristic divides {h}")
    if not is_gap_form(F):
        raise HypothesisViolation("F is not in gap form; apply gap_shift first")
    e = (h**s - 1) // (h - 1)
    torsion = field.torsion_elements()
    found = []
    seen = set()
    request = None
    for gamma in torsion:
        target = F.scale(gamma.inverse())
        a0 = nth_root_or_request(target.lead, e)
        if isinstance(a0, ExtensionRequest):
            request = request or a0
            continue
        leads = []
        for tau in torsion:
            if (tau**e).is_one() and a0 * tau not in leads:
                leads.append(a0 * tau)
        for a in leads:
            A = _solve_root(target, a, h, s)
            if A is not None and (gamma, A) not in seen:
                seen.add((gamma, A))
                found.append((gamma, A))
    if not found and request is not None:
        return request
    return found


def _solve_root(target: Polynomial, a: FieldElement, h: int, s: int) -> Polynomial | None:
    field = target.field
    N = h**s
    coeffs = {h: a.rep}
    for k in range(h - 2, -1, -1):
        deg = N - (h - k)
        base = Polynomial._raw(field, dict(coeffs))
        y0 = iterate(base, s).coeff(deg)
        coeffs[k] = field._one
        y1 = iterate(Polynomial._raw(field, dict(coeffs)), s).coeff(deg)
        slope = y1 - y0
        if slope.is_zero():  # pragma: no cover - excluded by char not dividing h
            return None
        c = (target.coeff(deg) - y0) / slope
        if c.is_zero():
            del coeffs[k]
        else:
            coeffs[k] = c.rep
    A = Polynomial._raw(field, coeffs)
    return A if iterate(A, s) == target else None
